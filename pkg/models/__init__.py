"""Pydantic payload models for the CLI."""
