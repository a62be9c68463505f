"""Runtime settings read from the environment.

A `.env` file is loaded when python-dotenv finds one; every key is optional.
"""

import logging
import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, Field, field_validator

try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:  # pragma: no cover
    pass

logger = logging.getLogger(__name__)


class GroupoidSettings(BaseModel):
    """Limits, tolerances and numerical defaults."""

    threads: Optional[int] = Field(default=None, ge=1)
    log_level: str = "WARNING"
    full_group_limit: int = Field(default=1_000_000, ge=1)
    aut_limit: int = Field(default=100_000, ge=1)
    support_tolerance: float = Field(default=1e-12, gt=0)
    norm_iters: int = Field(default=200, ge=1)
    norm_starts: int = Field(default=32, ge=0)
    norm_seed: int = 0
    isometry_tol: float = Field(default=1e-9, gt=0)
    refutation_margin: float = Field(default=1e-2, gt=0)
    max_norm_arrows: int = Field(default=2_000, ge=1)
    exhaustive_limit: int = Field(default=120, ge=1)
    max_denominator: int = Field(default=1_000_000, ge=1)

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value}")
        return level

    @classmethod
    def from_env(cls) -> "GroupoidSettings":
        env = {
            "threads": os.getenv("GPD_THREADS"),
            "log_level": os.getenv("GPD_LOG_LEVEL"),
            "full_group_limit": os.getenv("GPD_FULL_GROUP_LIMIT"),
            "aut_limit": os.getenv("GPD_AUT_LIMIT"),
            "support_tolerance": os.getenv("GPD_SUPPORT_TOLERANCE"),
            "norm_iters": os.getenv("GPD_NORM_ITERS"),
            "norm_starts": os.getenv("GPD_NORM_STARTS"),
            "norm_seed": os.getenv("GPD_NORM_SEED"),
            "isometry_tol": os.getenv("GPD_ISOMETRY_TOL"),
            "refutation_margin": os.getenv("GPD_REFUTATION_MARGIN"),
            "max_norm_arrows": os.getenv("GPD_MAX_NORM_ARROWS"),
            "exhaustive_limit": os.getenv("GPD_EXHAUSTIVE_LIMIT"),
            "max_denominator": os.getenv("GPD_MAX_DENOMINATOR"),
        }
        return cls(**{key: value for key, value in env.items() if value not in (None, "")})


@lru_cache(maxsize=1)
def get_settings() -> GroupoidSettings:
    """Settings for this process, read once."""
    settings = GroupoidSettings.from_env()
    logger.debug(f"Settings loaded: {settings.model_dump()}")
    return settings


def reset_settings() -> None:
    """Forget cached settings so the environment is read again."""
    get_settings.cache_clear()
