"""Catalog of the compact irreducible Hermitian symmetric spaces."""
