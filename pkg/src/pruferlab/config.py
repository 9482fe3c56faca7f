"""Run configuration shared by the command line and the harness."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .constructions import DEFAULT_ISO_CAP
from .gaussian import DEFAULT_BUDGET
from .ideals import DEFAULT_LATTICE_CAP
from .presentation import DEFAULT_PAIR_CAP
from .ring import DEFAULT_ORDER_CAP

ORDER_CAP_ENV = "PRUFERLAB_ORDER_CAP"
FORMATS = ("table", "machine")


@dataclass(frozen=True)
class RunConfig:
    degree_bound: int = 2
    order_cap: int = DEFAULT_ORDER_CAP
    iso_cap: int = DEFAULT_ISO_CAP
    gaussian_budget: int = DEFAULT_BUDGET
    lattice_cap: int = DEFAULT_LATTICE_CAP
    pair_cap: int = DEFAULT_PAIR_CAP
    format: str = "table"

    def __post_init__(self):
        for name in ("degree_bound", "order_cap", "iso_cap", "gaussian_budget", "lattice_cap", "pair_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")


def order_cap_from_env(default: int = DEFAULT_ORDER_CAP) -> int:
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ORDER_CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ORDER_CAP_ENV} must be positive")
    return value


def resolve_config(degree_bound: int | None = None, order_cap: int | None = None,
                   iso_cap: int | None = None, format: str | None = None) -> RunConfig:
    """Flags win over the environment, which wins over defaults."""
    kwargs = {}
    if degree_bound is not None:
        kwargs["degree_bound"] = degree_bound
    kwargs["order_cap"] = order_cap if order_cap is not None else order_cap_from_env()
    if iso_cap is not None:
        kwargs["iso_cap"] = iso_cap
    if format is not None:
        kwargs["format"] = format
    return RunConfig(**kwargs)
