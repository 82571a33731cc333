"""Centralized environment configuration for the magnons package.

This module provides a lightweight `EnvLoader` that loads variables from .env
once and exposes typed accessors for use across the package.
"""

import logging
import os

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_FORCE_CAP = 14
DEFAULT_MAX_WORKERS = 4
DEFAULT_LOG_LEVEL = "WARNING"


class EnvLoader:
    _loaded: bool = False

    def __init__(self) -> None:
        if not EnvLoader._loaded:
            load_dotenv()
            EnvLoader._loaded = True

    @staticmethod
    def _int_var(name: str, default: int) -> int:
        raw = os.getenv(name, "")
        if not raw.strip():
            return default
        try:
            value = int(raw)
        except ValueError:
            logger.warning("Ignoring malformed %s=%r, using %d", name, raw, default)
            return default
        if value < 1:
            logger.warning("Ignoring non-positive %s=%r, using %d", name, raw, default)
            return default
        return value

    # Oracle paths
    @property
    def brute_force_cap(self) -> int:
        """Largest N for which the full 2^N tensor oracle may be built."""
        return self._int_var("MAGNONS_BRUTE_FORCE_CAP", DEFAULT_BRUTE_FORCE_CAP)

    # Fan-out
    @property
    def max_workers(self) -> int:
        return self._int_var("MAGNONS_MAX_WORKERS", DEFAULT_MAX_WORKERS)

    # Logging
    @property
    def log_level(self) -> str:
        return os.getenv("MAGNONS_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()


# Singleton-style loader for convenience
env = EnvLoader()
