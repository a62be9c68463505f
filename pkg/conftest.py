"""Shared groupoid fixtures for the test suite."""

import os
from pathlib import Path

import pytest

from groupoids.builders import (
    action_groupoid,
    cyclic_group,
    group_groupoid,
    pair_groupoid,
    symmetric_group,
)
from groupoids.common.settings import reset_settings

SPECS = Path(__file__).parent / "specs"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings."""
    for key in [k for k in os.environ if k.startswith("GPD_")]:
        monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def specs_dir() -> Path:
    return SPECS


@pytest.fixture
def golden_dir() -> Path:
    """Expected stdout of CLI runs, byte for byte."""
    return GOLDEN


@pytest.fixture
def pair2():
    return pair_groupoid(2)


@pytest.fixture
def pair3():
    return pair_groupoid(3)


@pytest.fixture
def z3():
    return group_groupoid(cyclic_group(3))


@pytest.fixture
def z4():
    return group_groupoid(cyclic_group(4))


@pytest.fixture
def s3():
    return group_groupoid(symmetric_group(3))


@pytest.fixture
def free_action():
    """cyclic 2 swapping two points."""
    return action_groupoid(cyclic_group(2), 2, [[1, 0]])
