"""
Engine Settings

Runtime configuration for the engine. Values come from the environment
(a `.env` file in the working directory is loaded first) and are validated
with pydantic. Handles:
- Fourier-Motzkin row cap
- Fingerprint worker count
- Chamber sampling oracle size and seed
- Random corpus size and seed
- Log level
"""

import os
import logging
import threading
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "EQOS_"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class EngineSettings(BaseModel):
    """Complete settings model"""
    max_fm_rows: int = Field(default=50_000, gt=0)
    fingerprint_workers: int = Field(default=1, ge=1)
    sample_points: int = Field(default=10_000, ge=0)
    sample_seed: int = 0
    corpus_size: int = Field(default=24, ge=0)
    corpus_seed: int = 2007
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        value = value.upper()
        if value not in _LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(_LOG_LEVELS)}")
        return value


_settings: Optional[EngineSettings] = None
_lock = threading.Lock()


def _read_environment() -> Dict[str, Any]:
    values: Dict[str, Any] = {}
    for name in EngineSettings.model_fields:
        raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
        if raw is not None and raw.strip() != "":
            values[name] = raw.strip()
    return values


def load_settings() -> EngineSettings:
    """
    Load settings from the environment, falling back to defaults.

    Invalid values are reported and replaced by their defaults one field at a
    time, so a single typo does not discard the rest of the configuration.

    Returns:
        EngineSettings: Validated settings (cached after the first call)
    """
    global _settings
    with _lock:
        if _settings is not None:
            return _settings

        load_dotenv()
        values = _read_environment()
        try:
            settings = EngineSettings(**values)
        except ValidationError as e:
            bad_fields = {str(err["loc"][0]) for err in e.errors() if err.get("loc")}
            for field in sorted(bad_fields):
                logger.warning(
                    f"Invalid value {values.get(field)!r} for {ENV_PREFIX}{field.upper()}; using default"
                )
                values.pop(field, None)
            settings = EngineSettings(**values)

        logger.debug(f"Loaded settings: {settings.model_dump()}")
        _settings = settings
        return settings


def override_settings(**changes: Any) -> EngineSettings:
    """Replace selected settings for this process (used by CLI flags)."""
    global _settings
    current = load_settings()
    updated = EngineSettings(**{**current.model_dump(), **changes})
    with _lock:
        _settings = updated
    return updated


def reset_settings() -> None:
    """Forget cached settings so the next load re-reads the environment."""
    global _settings
    with _lock:
        _settings = None
