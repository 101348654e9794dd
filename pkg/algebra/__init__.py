"""Root systems, Weyl dimensions and explicit matrix Lie algebras."""
