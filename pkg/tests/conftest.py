"""
Pytest fixtures and configuration for the superchar test suite.

This module provides shared partitions, series layouts and parameter grids
used across the unit and integration tests.
"""

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.combinatorics import Partition
from src.core.series import SeriesLayout
from src.core.wgroups import DualPair


# ============================================================================
# Hypothesis profiles
# ============================================================================

settings.register_profile('default', max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('ci', max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('default')


# ============================================================================
# Session-level fixtures (setup once per test session)
# ============================================================================

@pytest.fixture(scope="session")
def empty_partition():
    """The empty partition ()."""
    return Partition()


@pytest.fixture(scope="session")
def small_partitions():
    """
    Every partition of size at most 4.

    Returns:
        List[Partition]: ordered by size, then lexicographically descending
    """
    return [Partition(rows) for rows in (
        (), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1),
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
    )]


@pytest.fixture(scope="session")
def yz_layout():
    """One y and one z variable."""
    return SeriesLayout(y=1, z=1)


@pytest.fixture(scope="session")
def both_pairs():
    """Both dual pairs."""
    return [DualPair.O_SP, DualPair.SP_SO]


# ============================================================================
# Function-level fixtures
# ============================================================================

@pytest.fixture
def y_only_layout():
    """Two y variables and no other alphabet."""
    return SeriesLayout(y=2)


# ============================================================================
# Pytest hooks
# ============================================================================

def pytest_configure(config):
    """
    Configure pytest with custom settings.

    This runs once at the start of the test session.
    """
    config.addinivalue_line(
        "markers", "oracle: compares a closed form against an independent computation"
    )
