"""Environment configuration.

- G2TOK_GRID_CAP: largest accepted `verify --grid N` (default 12)
- G2TOK_THREADS: worker processes for grid runs and pattern sums (default 1)
- G2TOK_MAX_TERMS: cap on symbolic sum size, a memory guard (default 200000)
- G2TOK_SPOT_POINTS: random rational points in the verification pre-check (default 20)
"""

import os

DEFAULT_GRID_CAP = 12
DEFAULT_THREADS = 1
DEFAULT_MAX_TERMS = 200_000
DEFAULT_SPOT_POINTS = 20


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")
    return value


def get_grid_cap() -> int:
    return _int_env("G2TOK_GRID_CAP", DEFAULT_GRID_CAP, minimum=1)


def get_threads() -> int:
    return _int_env("G2TOK_THREADS", DEFAULT_THREADS, minimum=1)


def get_max_terms() -> int:
    return _int_env("G2TOK_MAX_TERMS", DEFAULT_MAX_TERMS, minimum=1)


def get_spot_points() -> int:
    return _int_env("G2TOK_SPOT_POINTS", DEFAULT_SPOT_POINTS)
