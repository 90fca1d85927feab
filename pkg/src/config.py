"""Configuration management for coxeterfold"""

import os
from dotenv import load_dotenv
from src.errors import ConfigurationError

# Load environment variables
load_dotenv()


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
    if value < 0:
        raise ConfigurationError(f"{name} must be non-negative, got {value}")
    return value


# Root system selection
DEFAULT_TYPE = os.getenv("COXETER_TYPE", "A2")
TABLES_PATH = os.getenv("COXETER_TABLES", "")

# Enumeration limits
RADIUS_RANK2 = _int_setting("COXETER_RADIUS_RANK2", 8)
RADIUS_RANK3 = _int_setting("COXETER_RADIUS_RANK3", 5)
FOLD_CAP = _int_setting("COXETER_FOLD_CAP", 20)
REDUCED_WORD_CAP = _int_setting("COXETER_REDUCED_WORD_CAP", 200)

# Output Configuration
OUTPUT_DIR = os.getenv("OUTPUT_DIR", "output")
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

# Validation
if TABLES_PATH and not os.path.exists(TABLES_PATH):
    print(f"⚠️  WARNING: COXETER_TABLES points to missing file {TABLES_PATH}; using packaged tables only.")


def default_radius(rank: int) -> int:
    """Region radius used when none is given: rank-2 and smaller vs. larger ranks"""
    return RADIUS_RANK2 if rank <= 2 else RADIUS_RANK3
