"""Random drawings used by the property tests and the reproduction report."""

from __future__ import annotations

import random

from .construct import random_quasi_optimal
from .drawing import OnePlaneDrawing, add_edge, addable_edges, delete_edge, planar_drawing
from .graph import SimpleGraph


def random_tree(rng: random.Random, n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((rng.randrange(v), v) for v in range(1, n)))


def random_drawing(rng: random.Random, n: int, steps: int | None = None) -> OnePlaneDrawing:
    """Random spanning tree, then ``steps`` random edge additions (plain or crossing).

    ``steps=None`` draws the count at random; additions stop early once
    the drawing is maximal.
    """
    d = planar_drawing(random_tree(rng, n))
    if steps is None:
        steps = rng.randint(0, 4 * n)
    for _ in range(steps):
        options = addable_edges(d)
        if not options:
            break
        d = add_edge(d, rng.choice(options))
    return d


def maximalize(d: OnePlaneDrawing, rng: random.Random | None = None) -> OnePlaneDrawing:
    """Add edges until the drawing is maximal (first option each time unless ``rng``)."""
    while True:
        options = addable_edges(d)
        if not options:
            return d
        d = add_edge(d, rng.choice(options) if rng else options[0])


def delete_random_uncrossed(rng: random.Random, d: OnePlaneDrawing) -> OnePlaneDrawing:
    u, v = rng.choice(d.non_crossing_edges())
    return delete_edge(d, u, v)


def quasi_optimal_corpus(seed: int, count: int, max_pieces: int = 5) -> list[OnePlaneDrawing]:
    rng = random.Random(seed)
    return [random_quasi_optimal(rng, rng.randint(1, max_pieces)) for _ in range(count)]
