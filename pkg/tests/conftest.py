"""Conftest for qln tests.

Library modules read their knobs from ``config`` at call time, so every test
gets default limits, quiet logging and a private count store under tmp_path.
"""

import os
import sys

import pytest

# Add qln directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'qln'))

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Default engine settings and a fresh data directory."""
    data_dir = str(tmp_path / "data")
    monkeypatch.setattr('config.DATA_DIR', data_dir)
    monkeypatch.setattr('config.VERBOSE', False)
    monkeypatch.setattr('config.EXHAUSTIVE_MAX_N', 8)
    monkeypatch.setattr('config.ORACLE_MAX_N', 7)
    monkeypatch.setattr('config.BRANCH_LIMIT', 5040)
    monkeypatch.setattr('config.CHECK_MUTATION', False)
    monkeypatch.setattr('config.WORKERS', 1)
    yield data_dir


@pytest.fixture
def store_db(isolated_config):
    """Initialized count store."""
    import store
    store.init_db()
    return store


@pytest.fixture
def read_fixture():
    def read(name):
        with open(os.path.join(FIXTURES, name), 'r', encoding='utf-8') as handle:
            return handle.read()
    return read


@pytest.fixture
def runner():
    from click.testing import CliRunner
    return CliRunner()
