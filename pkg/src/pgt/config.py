"""Enumeration caps.

Full element enumeration is bounded by a cap so that a mistyped spec cannot
eat the machine.  The default is 2**20 stored permutations; PGT_ENUM_CAP
overrides it, and an explicit per-call value overrides both.  The naive
pseudocentre oracle has its own, much smaller default.
"""

import os

DEFAULT_ENUM_CAP = 1 << 20
DEFAULT_ORACLE_CAP = 5000

_ENV_VAR = "PGT_ENUM_CAP"


def enumeration_cap(override=None):
    """Resolve the effective enumeration cap."""
    if override is not None:
        return int(override)
    env = os.environ.get(_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_ENUM_CAP
