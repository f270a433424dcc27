"""
Django settings for the motivic project.

The project has no web surface and no database: Django provides the app
layout, the management commands (the CLI) and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

import os
from pathlib import Path

from django.core.exceptions import ImproperlyConfigured
from dotenv import load_dotenv

# reads variables from a .env file and sets them in os.environ
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv(
    "DJANGO_SECRET_KEY", "django-insecure-motivic-local-computation-only"
)

DEBUG = os.getenv("DEBUG", "false").lower().strip() == "true"

ALLOWED_HOSTS = []


def env_int(name: str, default: int, *, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise ImproperlyConfigured(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ImproperlyConfigured(f"{name} must be >= {minimum}, got {value}")
    return value


# Application definition

INSTALLED_APPS = [
    "core",
    "partitions",
    "plethystic",
    "motives",
    "quot",
    "verification",
]

# Everything is computed in memory
DATABASES = {}

# ------------------------------------------------------------------
# Motivic engine
# ------------------------------------------------------------------
# default truncation order of every series command (--order overrides)
MOTIVIC_ORDER = env_int("MOTIVIC_ORDER", 10)

# randomized verification suites
MOTIVIC_SEED = env_int("MOTIVIC_SEED", 42)
MOTIVIC_SAMPLES = env_int("MOTIVIC_SAMPLES", 200, minimum=1)
MOTIVIC_WORKERS = env_int("MOTIVIC_WORKERS", 1, minimum=1)

# (g, r) grid of the curve suite
MOTIVIC_GENERA = (0, 1, 2, 3)
MOTIVIC_RANKS = (1, 2, 3, 4)

# Logging
# https://docs.djangoproject.com/en/6.0/topics/logging/
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper().strip()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        # stderr only, rendered results on stdout stay byte-identical
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app in INSTALLED_APPS
    },
}

# Internationalization
LANGUAGE_CODE = "en-us"
TIME_ZONE = "Europe/Berlin"
USE_I18N = False
USE_TZ = True
