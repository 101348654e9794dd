"""Shared pytest fixtures."""

import pytest
from click.testing import CliRunner

from algebra.root_system import RootSystemFactory


@pytest.fixture
def fresh_factory():
    """RootSystemFactory with an empty cache, cleared again afterwards."""
    RootSystemFactory.clear_cache()
    yield RootSystemFactory
    RootSystemFactory.clear_cache()


@pytest.fixture
def runner():
    return CliRunner()
