"""Upper bounds on the crossings of a 1-plane drawing."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .drawing import OnePlaneDrawing, is_maximal, underlying_graph
from .errors import BadParameter
from .graph import SimpleGraph


def dominating_vertex(g: SimpleGraph) -> int | None:
    """Lowest-id vertex adjacent to every other vertex, if any."""
    for v, d in enumerate(g.degrees()):
        if d == g.n - 1 and g.n > 1:
            return v
    return None


def has_dominating_vertex(g: SimpleGraph) -> bool:
    return dominating_vertex(g) is not None


def pro1_window(n: int) -> tuple[Fraction, Fraction]:
    """Edge-count range ``[23n/6 - 20/3, 4n - 8]`` of quasi-optimal drawings on ``n`` vertices."""
    if n < 8:
        raise BadParameter(f"quasi-optimal drawings need n >= 8, got {n}")
    return Fraction(23 * n, 6) - Fraction(20, 3), Fraction(4 * n - 8)


class BoundReport(NamedTuple):
    bound: int
    rules: tuple[str, ...]


def crossing_upper_bound_report(d: OnePlaneDrawing) -> BoundReport:
    """``n - 2`` in general, ``n - 3`` once any exclusion rule certifies a non-EQ drawing.

    Rules: ``cro1`` for ``n <= 7``; ``cro2`` for a dominating vertex;
    ``cro3`` for a maximal drawing with fewer than ``23n/6 - 20/3`` edges.
    """
    n = d.n
    if n < 3:
        raise BadParameter("bounds need at least 3 vertices")
    g = underlying_graph(d)
    rules = []
    if n <= 7:
        rules.append("cro1")
    if has_dominating_vertex(g):
        rules.append("cro2")
    if g.m < Fraction(23 * n, 6) - Fraction(20, 3) and is_maximal(d):
        rules.append("cro3")
    return BoundReport(n - 3 if rules else n - 2, tuple(rules))
