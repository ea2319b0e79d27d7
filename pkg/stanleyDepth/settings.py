"""Django settings for stanleyDepth.

The project is a command-line harness: Django supplies the management-command
surface, settings and logging configuration. Solver and transfer limits are
driven by environment variables so experiment runs can be tuned without code
changes.
"""

from __future__ import annotations

import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent


def _env_bool(name: str, *, default: bool) -> bool:
    """Parse a boolean environment variable.

    Args:
        name: Environment variable name.
        default: Value when the variable is not set.

    Returns:
        Parsed boolean value.
    """

    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in {"1", "true", "t", "yes", "y", "on"}


def _env_int(name: str, *, default: int) -> int:
    """Parse an integer environment variable.

    Args:
        name: Environment variable name.
        default: Value when the variable is not set.

    Returns:
        Parsed integer value.
    """

    raw = os.getenv(name)
    if raw is None:
        return default
    return int(raw.strip())


def _env_float(name: str, *, default: float) -> float:
    """Parse a float environment variable (same conventions as `_env_int`)."""

    raw = os.getenv(name)
    if raw is None:
        return default
    return float(raw.strip())


def _env_str(name: str, *, default: str) -> str:
    """Return a trimmed string environment variable, or `default` when unset or blank."""

    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    return raw.strip()


DEBUG = _env_bool("DJANGO_DEBUG", default=True)

_DEV_SECRET_KEY = "dev-only-insecure-secret-key"
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY") or _DEV_SECRET_KEY

ALLOWED_HOSTS: list[str] = []

INSTALLED_APPS = [
    "core.apps.CoreConfig",
]

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}

LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Solver and harness limits (see core.services for how they reach algebra).
SDEPTH_MAX_POSET_POINTS = _env_int("SDEPTH_MAX_POSET_POINTS", default=4096)
SDEPTH_TIME_BUDGET_SECS = _env_float("SDEPTH_TIME_BUDGET_SECS", default=60.0)
SDEPTH_TRANSFER_MAX_DOUBLINGS = _env_int("SDEPTH_TRANSFER_MAX_DOUBLINGS", default=3)
SDEPTH_ENUMERATION_LIMIT = _env_int("SDEPTH_ENUMERATION_LIMIT", default=20)
SDEPTH_LOG_LEVEL = _env_str("SDEPTH_LOG_LEVEL", default="WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "algebra": {"handlers": ["console"], "level": SDEPTH_LOG_LEVEL, "propagate": False},
        "core": {"handlers": ["console"], "level": SDEPTH_LOG_LEVEL, "propagate": False},
    },
}
