"""Asymptotic constants for ex(n, K3, C5) and triangle-density reports.

Every constant multiplies n^{3/2} with the (1 + o(1)) factor dropped, so none of
these are bounds at any particular n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .detect import count_triangles
from .graph import Graph

ASYMPTOTIC_MARKER = "asymptotic only - not a pointwise bound"


@dataclass(frozen=True)
class BoundConstant:
    name: str
    value: float
    role: str


CONSTANTS = {
    c.name: c
    for c in (
        BoundConstant("bg_lower", 1 / (3 * math.sqrt(3)), "lower, doubling construction"),
        BoundConstant("bg_upper", 5 / 4, "upper, Bollobas-Gyori"),
        BoundConstant("alon_shikhelman", math.sqrt(3) / 2, "upper, Alon-Shikhelman"),
        BoundConstant("main_theorem", 1 / (2 * math.sqrt(2)), "upper, triangles in C5-free graphs"),
        BoundConstant("erdos_simonovits", 1 / (2 * math.sqrt(2)), "upper, edges in {C4,C5}-free graphs"),
    )
}


def constant(name: str) -> BoundConstant:
    try:
        return CONSTANTS[name]
    except KeyError:
        raise KeyError(f"unknown constant {name!r}; expected one of {list(CONSTANTS)}") from None


def eval_bound(n: int, c: BoundConstant | str) -> float:
    if isinstance(c, str):
        c = constant(c)
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    return c.value * n ** 1.5


@dataclass
class BoundReport:
    n: int
    t: int
    ratio: Optional[float]
    provenance: str
    comparisons: list[dict] = field(default_factory=list)
    marker: str = ASYMPTOTIC_MARKER

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "ratio": self.ratio,
            "provenance": self.provenance,
            "marker": self.marker,
            "comparisons": self.comparisons,
        }


def ratio(n: int, t: int) -> Optional[float]:
    return None if n == 0 else t / n ** 1.5


def report_counts(n: int, t: int, provenance: str = "") -> BoundReport:
    r = ratio(n, t)
    rows = []
    for c in CONSTANTS.values():
        rows.append({
            "name": c.name,
            "constant": c.value,
            "at_n": eval_bound(n, c),
            "ratio_exceeds_constant": None if r is None else r > c.value,
        })
    return BoundReport(n, t, r, provenance, rows)


def report(g: Graph, provenance: str = "") -> BoundReport:
    return report_counts(g.n, count_triangles(g), provenance)
