"""Size bounds for the brute-force oracles and exact solvers.

Every bound can be overridden through the PACK2DOM_SOLVER_BOUND environment
variable (a single integer that replaces whichever default a caller passes).
This exists for test harnesses that want to force the brute-force paths onto
larger or smaller instances; normal use never sets it.
"""
from __future__ import annotations

import os

ENV_BOUND = "PACK2DOM_SOLVER_BOUND"

# Defaults, chosen so every bounded routine stays interactive on one core.
NU2_BRUTEFORCE_MAX_EDGES = 24
GAMMA_BRUTEFORCE_MAX_N = 20
EXACT_SOLVER_MAX_N = 40
CANONICAL_MAX_N = 12
BUILTIN_ENUMERATION_MAX_N = 8


def effective_bound(default: int) -> int:
    """The default bound, unless the override environment variable is set."""
    raw = os.environ.get(ENV_BOUND)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default
