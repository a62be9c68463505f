"""Tests for environment-driven settings."""

import pytest
from pydantic import ValidationError

from groupoids.common.settings import GroupoidSettings, get_settings, reset_settings


def test_defaults():
    settings = get_settings()
    assert settings.log_level == "WARNING"
    assert settings.norm_seed == 0
    assert settings.exhaustive_limit == 120
    assert settings.threads is None


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("GPD_NORM_ITERS", "5")
    monkeypatch.setenv("GPD_LOG_LEVEL", "debug")
    monkeypatch.setenv("GPD_THREADS", "")
    reset_settings()
    settings = get_settings()
    assert settings.norm_iters == 5
    assert settings.log_level == "DEBUG"
    assert settings.threads is None


def test_settings_are_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("GPD_NORM_SEED", "9")
    assert get_settings() is first
    reset_settings()
    assert get_settings().norm_seed == 9


@pytest.mark.parametrize("field,value", [("log_level", "LOUD"), ("norm_iters", 0), ("isometry_tol", -1.0)])
def test_invalid_values(field, value):
    with pytest.raises(ValidationError):
        GroupoidSettings(**{field: value})
