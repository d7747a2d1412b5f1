"""Tunable limits, overridable through environment variables."""
import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}") from None


def cache_threshold() -> int:
    """Maximum number of runs of both operands for a memoized occ_runs result."""
    return _env_int("SUBWORD_CACHE_THRESHOLD", 8)


def max_search_length() -> int:
    return _env_int("SUBWORD_MAX_SEARCH_LENGTH", 28)


def max_composition_length() -> int:
    return _env_int("SUBWORD_MAX_COMPOSITION_LENGTH", 14)


def series_budget() -> int:
    """Budget of elementary big-integer operations for tables and series."""
    return _env_int("SUBWORD_SERIES_BUDGET", 10**8)


def max_witnesses() -> int:
    return _env_int("SUBWORD_MAX_WITNESSES", 16)
