"""Straight-line figures of drawings and report plots (matplotlib, Agg)."""

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .drawing import OnePlaneDrawing  # noqa: E402
from .embed import RotationSystem, faces  # noqa: E402
from .errors import LayoutDegenerate  # noqa: E402

log = logging.getLogger(__name__)

TRUE_COLOR = "#1f3b73"
EDGE_COLOR = "#555555"
CROSS_COLOR = "#c0392b"


def _barycentric(adj: list[list[int]], fixed: dict[int, tuple[float, float]]) -> np.ndarray:
    n = len(adj)
    free = [v for v in range(n) if v not in fixed]
    idx = {v: i for i, v in enumerate(free)}
    pos = np.zeros((n, 2))
    for v, p in fixed.items():
        pos[v] = p
    if free:
        a = np.zeros((len(free), len(free)))
        b = np.zeros((len(free), 2))
        for v in free:
            i = idx[v]
            a[i, i] = len(adj[v])
            for w in adj[v]:
                if w in idx:
                    a[i, idx[w]] -= 1
                else:
                    b[i] += pos[w]
        try:
            sol = np.linalg.solve(a, b)
        except np.linalg.LinAlgError as exc:
            raise LayoutDegenerate(str(exc)) from None
        pos[free] = sol
    return pos


def rotation_matches(rs: RotationSystem, pos: np.ndarray, vertices: Iterable[int] | None = None) -> bool:
    """True if sorting neighbours by angle reproduces the counterclockwise rotation."""
    for v in range(rs.n) if vertices is None else vertices:
        r = rs.rot[v]
        if len(r) < 3:
            continue
        ang = [math.atan2(*(pos[w] - pos[v])[::-1]) for w in r]
        order = sorted(range(len(r)), key=lambda i: ang[i])
        if len(set(np.round(ang, 12))) != len(r):
            return False
        i0 = order.index(0)
        if order[i0:] + order[:i0] != list(range(len(r))):
            return False
    return True


def tutte_layout(rs: RotationSystem, stellate: bool = True) -> np.ndarray:
    """Convex outer face on a regular polygon, interior by barycentric averaging.

    Non-triangular inner faces get a temporary centre vertex first so the
    averaging runs on a triangulated disc. Raises :class:`LayoutDegenerate`
    when the result does not reproduce the rotation system.
    """
    fs = faces(rs)
    if not fs:
        raise LayoutDegenerate("no faces")
    outer = max(range(len(fs)), key=lambda i: (len(set(fs[i].walk)), -i))
    walk = fs[outer].walk
    if len(set(walk)) != len(walk):
        raise LayoutDegenerate("outer face boundary is not a cycle")
    adj = [list(r) for r in rs.rot]
    if stellate:
        for i, f in enumerate(fs):
            if i == outer or len(f) <= 3:
                continue
            if len(set(f.walk)) != len(f.walk):
                raise LayoutDegenerate("face boundary repeats a vertex")
            c = len(adj)
            adj.append(list(f.walk))
            for w in f.walk:
                adj[w].append(c)
    # the outer walk runs clockwise
    k = len(walk)
    fixed = {w: (math.cos(-2 * math.pi * j / k + math.pi / 2), math.sin(-2 * math.pi * j / k + math.pi / 2))
             for j, w in enumerate(walk)}
    pos = _barycentric(adj, fixed)[: rs.n]
    if not rotation_matches(rs, pos):
        raise LayoutDegenerate("barycentric layout collapses part of the drawing")
    return pos


def layout(d: OnePlaneDrawing) -> tuple[np.ndarray, bool]:
    """Positions for every planarization vertex, and whether rotations are preserved."""
    try:
        return tutte_layout(d.rs), True
    except LayoutDegenerate as exc:
        log.warning("layout degenerate (%s); using plain barycentric fallback", exc)
    try:
        pos = tutte_layout(d.rs, stellate=False)
        return pos, True
    except LayoutDegenerate:
        pass
    n = d.rs.n
    pos = np.array([[math.cos(2 * math.pi * v / n), math.sin(2 * math.pi * v / n)] for v in range(n)])
    return pos, rotation_matches(d.rs, pos)


def draw(d: OnePlaneDrawing, ax=None, labels: bool = True):
    pos, _ = layout(d)
    if ax is None:
        _, ax = plt.subplots(figsize=(5, 5))
    for u, v in d.rs.graph().sorted_edges():
        ax.plot(*pos[[u, v]].T, color=EDGE_COLOR, lw=1.0, zorder=1)
    for c in d.fakes:
        (mark,) = ax.plot(*pos[c], marker="x", ms=7, mew=1.8, color=CROSS_COLOR, zorder=3, ls="none")
        mark.set_gid(f"crossing-{c}")
    ax.scatter(*pos[: d.n].T, s=160, color=TRUE_COLOR, zorder=2)
    if labels:
        for v in range(d.n):
            ax.text(*pos[v], str(v), color="white", fontsize=7, ha="center", va="center", zorder=4)
    ax.set_aspect("equal")
    ax.axis("off")
    return ax


def svg_export(d: OnePlaneDrawing, path: str | Path) -> Path:
    """Write the drawing as SVG; each crossing mark is a group with id ``crossing-<v>``."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 5))
    draw(d, ax)
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)
    return path


def plot_edge_window(points: Iterable[tuple[int, int, int]], path: str | Path) -> Path:
    """Edge counts of quasi-optimal drawings against the admissible window.

    ``points`` holds ``(n, m, k)`` triples with ``k`` the number of pieces.
    """
    pts = np.array(list(points))
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = np.arange(8, max(pts[:, 0].max(), 8) + 1)
    ax.fill_between(ns, 23 * ns / 6 - 20 / 3, 4 * ns - 8, color="#dde6f3", label="admissible edge counts")
    sc = ax.scatter(pts[:, 0], pts[:, 1], c=pts[:, 2], cmap="viridis", s=14, zorder=3)
    fig.colorbar(sc, ax=ax, label="pieces")
    ax.set_xlabel("vertices")
    ax.set_ylabel("edges")
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)
