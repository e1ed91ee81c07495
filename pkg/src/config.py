import logging
import os
from typing import Optional

DEFAULT_THREADS = 4
DEFAULT_LOG_LEVEL = "WARNING"

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _get_setting(name: str) -> Optional[str]:
    value = os.environ.get(name)
    if not value:
        # Fallback: read from .env in the project root
        try:
            env_path = os.path.join(PROJECT_ROOT, '.env')
            if os.path.exists(env_path):
                with open(env_path, 'r') as f:
                    for line in f:
                        # Accept "NAME=value" and "export NAME=value"
                        clean_line = line.strip().replace('export ', '', 1).strip()
                        if clean_line.startswith('#'):
                            continue
                        parts = clean_line.split('=', 1)
                        if len(parts) == 2 and parts[0].strip() == name:
                            value = parts[1].strip().strip('"').strip("'")
                            # Also set it in environ for future use
                            os.environ[name] = value
                            break
        except OSError:
            pass
    return value


def get_threads() -> int:
    """Worker count for verify suites, censuses and benzene closure (HOURGLASS_THREADS)."""
    raw = _get_setting("HOURGLASS_THREADS")
    if not raw:
        return DEFAULT_THREADS
    try:
        threads = int(raw)
    except ValueError:
        threads = 0
    if threads < 1:
        raise ValueError(f"HOURGLASS_THREADS must be a positive integer, got '{raw}'. "
                         "Please set it in .env or environment variables.")
    return threads


def get_golden_dir() -> str:
    raw = _get_setting("HOURGLASS_GOLDEN_DIR")
    return raw or os.path.join(PROJECT_ROOT, "tests", "golden")


def get_log_level() -> int:
    raw = _get_setting("HOURGLASS_LOG_LEVEL") or DEFAULT_LOG_LEVEL
    level = logging.getLevelName(raw.upper())
    if not isinstance(level, int):
        raise ValueError(f"HOURGLASS_LOG_LEVEL must be a logging level name, got '{raw}'. "
                         "Please set it in .env or environment variables.")
    return level
