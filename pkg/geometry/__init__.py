"""Schubert calculus and Pluecker degrees."""
