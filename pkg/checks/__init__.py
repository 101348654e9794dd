"""Verification suites and the supervisor that runs them."""
