"""Size caps for whole-S_n computations.

Everything in this package is exact and exhaustive, so costs grow like n!.
Two caps keep accidental huge runs from happening: a general cap for
operations that enumerate S_n (default 8) and a tighter cap for building
full Temperley-Lieb expansion tables (default 7, since the table for S_n
holds one sparse vector per permutation).

The environment variable TLIMM_MAX_N overrides both caps.
"""

import os

from .errors import LimitError

DEFAULT_MAX_N = 8
DEFAULT_THETA_MAX_N = 7


def _env_override() -> int | None:
    raw = os.environ.get("TLIMM_MAX_N")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise LimitError(f"TLIMM_MAX_N must be an integer, got {raw!r}") from None


def max_n() -> int:
    """The cap for operations enumerating all of S_n."""
    override = _env_override()
    return DEFAULT_MAX_N if override is None else override


def theta_max_n() -> int:
    """The cap for building a full table of Temperley-Lieb expansions."""
    override = _env_override()
    return DEFAULT_THETA_MAX_N if override is None else override


def check_limit(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise LimitError(
            f"{what} requested for n={n}, above the configured cap {limit} "
            "(set TLIMM_MAX_N to override)"
        )
