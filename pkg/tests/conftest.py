"""
Shared fixtures; puts the repo root and the service directory on sys.path
the same way the service entry point does.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.parent
SERVICE_DIR = ROOT / "services" / "enumerator-service"

for path in (ROOT, SERVICE_DIR):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from core.poset import chain, complete_bipartite  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run n=6 / n=7 exhaustive checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive run, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def k22():
    return complete_bipartite(2, 2)


@pytest.fixture
def point():
    return chain(1)

