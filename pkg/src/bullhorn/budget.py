"""Desk-scale vertex budgets for exhaustive computations."""

from __future__ import annotations

import os

ENV_VAR = "BULLHORN_BUDGET_N"


def desk_budget(default: int) -> int:
    """``BULLHORN_BUDGET_N`` if set, else ``default``."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or not raw.strip():
        return default
    value = int(raw)
    if value < 0:
        raise ValueError(f"{ENV_VAR} must be nonnegative")
    return value
