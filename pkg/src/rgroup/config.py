# Libraries
import logging
import os
from dataclasses import dataclass

logger = logging.getLogger(__name__)

ORACLE_R_MAX_CEILING = 6
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    oracle_r_max: int = 3
    oracle_workers: int = 1


def _get_int(name: str, default: int, minimum: int, maximum: int | None = None) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise RuntimeError(f"Environment variable {name}={raw!r} is not an integer") from e
    if value < minimum or (maximum is not None and value > maximum):
        bound = f"[{minimum}, {maximum}]" if maximum is not None else f">= {minimum}"
        raise RuntimeError(f"Environment variable {name}={value} must be in {bound}")
    return value


def get_settings() -> Settings:
    """
    Read settings from the environment at call time.

    Returns
    -------
    Settings
        Values of RGROUP_LOG_LEVEL, RGROUP_ORACLE_R_MAX and RGROUP_ORACLE_WORKERS,
        with defaults for anything unset.

    Raises
    ------
    RuntimeError
        If a variable is set to something unusable.
    """
    level = os.environ.get("RGROUP_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
    if level not in _LOG_LEVELS:
        raise RuntimeError(
            f"Environment variable RGROUP_LOG_LEVEL={level!r} must be one of {', '.join(_LOG_LEVELS)}"
        )
    return Settings(
        log_level=level,
        oracle_r_max=_get_int("RGROUP_ORACLE_R_MAX", 3, 1, ORACLE_R_MAX_CEILING),
        oracle_workers=_get_int("RGROUP_ORACLE_WORKERS", 1, 1),
    )


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logger.debug("Logging configured at %s", level.upper())
