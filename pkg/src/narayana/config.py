"""Environment-driven settings for Narayana-Paths."""

import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from narayana.constants import (
    DEFAULT_ENUMERATION_BOUND,
    DEFAULT_GF_BOUND,
    DEFAULT_TABLE_BOUND,
)

load_dotenv()

DEFAULT_LOG_LEVEL = "WARNING"


def parse_log_level(value: str) -> str:
    """Upper-cased logging level name; unknown names raise ValueError."""
    level = value.strip().upper()
    if level not in logging.getLevelNamesMapping():
        raise ValueError(f"unknown log level {value!r}")
    return level


class Settings(BaseModel):
    """Bounds and logging level, read once per call to get_settings()."""

    enumeration_bound: int = Field(
        DEFAULT_ENUMERATION_BOUND, ge=0, description="Largest semilength enumerated"
    )
    gf_bound: int = Field(DEFAULT_GF_BOUND, ge=0, description="Largest x-degree expanded")
    table_bound: int = Field(DEFAULT_TABLE_BOUND, ge=1, description="Largest table nmax")
    log_level: str = Field(DEFAULT_LOG_LEVEL, description="Root logging level")

    @field_validator("log_level")
    @classmethod
    def known_level(cls, value: str) -> str:
        return parse_log_level(value)


def get_settings() -> Settings:
    """Build settings from NARAYANA_* environment variables."""
    values: dict[str, str] = {}
    for field_name in Settings.model_fields:
        raw = os.getenv(f"NARAYANA_{field_name.upper()}")
        if raw is not None:
            values[field_name] = raw
    return Settings(**values)
