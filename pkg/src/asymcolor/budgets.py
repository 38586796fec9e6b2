"""Hard caps for the exhaustive engines.

All enumerations fail loudly with BudgetExceededError instead of silently
truncating.  Defaults can be overridden with environment variables
(integer values):

    ASYMCOLOR_MAX_VERTICES    cap for corpus enumeration        (default 8)
    ASYMCOLOR_MAX_COLORINGS   cap for coloring-space search     (default 2**20)
    ASYMCOLOR_MAX_ROTATIONS   cap for rotation-system work      (default 10**6)
    ASYMCOLOR_MAX_AUT_VERTICES cap for automorphism enumeration (default 64)
"""

from __future__ import annotations

import os
from dataclasses import dataclass

_ENV_PREFIX = "ASYMCOLOR_"


@dataclass(frozen=True)
class Budgets:
    max_vertices: int = 8
    max_colorings: int = 2**20
    max_rotations: int = 10**6
    max_aut_vertices: int = 64


def from_env() -> Budgets:
    """Budgets with any environment overrides applied."""
    values = {}
    for field, env in (
        ("max_vertices", "MAX_VERTICES"),
        ("max_colorings", "MAX_COLORINGS"),
        ("max_rotations", "MAX_ROTATIONS"),
        ("max_aut_vertices", "MAX_AUT_VERTICES"),
    ):
        raw = os.environ.get(_ENV_PREFIX + env)
        if raw is not None:
            values[field] = int(raw)
    return Budgets(**values)


DEFAULT = Budgets()


def resolve(budgets: Budgets | None) -> Budgets:
    return from_env() if budgets is None else budgets
