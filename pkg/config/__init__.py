"""Configuration module for the projective rank toolkit."""
