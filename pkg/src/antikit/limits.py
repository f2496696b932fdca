"""Size bounds for the exponential (brute-force) routines.

``ANTIKIT_BRUTE_LIMIT`` overrides both bounds. It is read on every call so
that it can be changed at runtime.
"""

import os

from .errors import GroundSetTooLarge

ENUMERATION_LIMIT = 20
CHORDLESS_PATH_LIMIT = 16

ENV_VAR = "ANTIKIT_BRUTE_LIMIT"


def _override():
    raw = os.environ.get(ENV_VAR)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError:
        raise GroundSetTooLarge(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 0:
        raise GroundSetTooLarge(f"{ENV_VAR} must be non-negative, got {value}")
    return value


def enumeration_limit() -> int:
    override = _override()
    return ENUMERATION_LIMIT if override is None else override


def chordless_path_limit() -> int:
    override = _override()
    return CHORDLESS_PATH_LIMIT if override is None else override


def check_size(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise GroundSetTooLarge(
            f"{what}: ground set has {n} elements, brute-force bound is {limit} "
            f"(set {ENV_VAR} to raise it)"
        )
