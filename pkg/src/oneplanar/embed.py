"""Rotation systems (combinatorial maps) and face traversal.

A rotation system lists, for every vertex, its neighbours in
counterclockwise order. Darts are ordered pairs ``(u, v)`` over an edge;
since every embedded graph here is simple a dart is determined by its
endpoints. The face to the left of dart ``u -> v`` continues with
``v -> w`` where ``w`` is the neighbour just before ``u`` in the
counterclockwise rotation at ``v``.
"""

from __future__ import annotations

from functools import cached_property
from typing import NamedTuple, Sequence

import networkx as nx

from .errors import MalformedRotation
from .graph import SimpleGraph

Dart = tuple[int, int]


class RotationSystem:
    """Immutable rotation system over vertices ``0..len(rot)-1``."""

    def __init__(self, rot: Sequence[Sequence[int]]):
        self.rot: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rot)
        n = len(self.rot)
        for u, nbrs in enumerate(self.rot):
            if len(set(nbrs)) != len(nbrs):
                raise MalformedRotation(f"vertex {u} lists a neighbour twice")
            for v in nbrs:
                if v == u:
                    raise MalformedRotation(f"loop at vertex {u}")
                if not 0 <= v < n:
                    raise MalformedRotation(f"vertex {u} has out-of-range neighbour {v}")
        for u, nbrs in enumerate(self.rot):
            for v in nbrs:
                if u not in self.pos[v]:
                    raise MalformedRotation(f"dart {u}->{v} has no twin")

    def __eq__(self, other):
        return isinstance(other, RotationSystem) and self.rot == other.rot

    def __hash__(self):
        return hash(self.rot)

    def __repr__(self):
        return f"RotationSystem({list(map(list, self.rot))})"

    @cached_property
    def pos(self) -> list[dict[int, int]]:
        return [{v: i for i, v in enumerate(nbrs)} for nbrs in self.rot]

    @property
    def n(self) -> int:
        return len(self.rot)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rot) // 2

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def darts(self):
        for u, nbrs in enumerate(self.rot):
            for v in nbrs:
                yield (u, v)

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        r = self.rot[v]
        return (v, r[(self.pos[v][u] - 1) % len(r)])

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset((u, v) for u, v in self.darts() if u < v))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                for w in self.rot[stack.pop()]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def mirror(self) -> "RotationSystem":
        return RotationSystem([tuple(reversed(r)) for r in self.rot])

    def relabel(self, mapping: Sequence[int]) -> "RotationSystem":
        """Rename vertex ``v`` to ``mapping[v]`` (a permutation)."""
        out: list[tuple[int, ...]] = [()] * self.n
        for v, nbrs in enumerate(self.rot):
            out[mapping[v]] = tuple(mapping[w] for w in nbrs)
        return RotationSystem(out)

    def induced(self, keep: Sequence[int]) -> tuple["RotationSystem", list[int]]:
        """Sub-rotation on ``keep``; returns it and the old id of each new vertex."""
        old = sorted(keep)
        new_id = {v: i for i, v in enumerate(old)}
        rot = [tuple(new_id[w] for w in self.rot[v] if w in new_id) for v in old]
        return RotationSystem(rot), old


class FaceWalk(NamedTuple):
    """A face as its cyclic vertex walk; ``darts`` lists ``(walk[i], walk[i+1])``."""

    walk: tuple[int, ...]

    @property
    def darts(self) -> list[Dart]:
        w = self.walk
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]

    def __len__(self):
        return len(self.walk)


def faces(rs: RotationSystem) -> list[FaceWalk]:
    """All face walks; every dart lies on exactly one of them.

    Isolated vertices contribute no walk (their face is counted by
    :func:`euler_characteristic`).
    """
    seen: set[Dart] = set()
    out = []
    for start in rs.darts():
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d[0])
            d = rs.next_dart(d)
        if d != start:
            raise MalformedRotation(f"face traversal from {start} does not close")
        out.append(FaceWalk(tuple(walk)))
    return out


def face_of_dart(rs: RotationSystem, fs: list[FaceWalk] | None = None) -> dict[Dart, int]:
    fs = faces(rs) if fs is None else fs
    return {d: i for i, f in enumerate(fs) for d in f.darts}


def euler_characteristic(rs: RotationSystem) -> int:
    """``V - E + F`` summed over components (isolated vertices count one face)."""
    isolated = sum(1 for r in rs.rot if not r)
    return rs.n - rs.m + len(faces(rs)) + isolated


def genus(rs: RotationSystem) -> int:
    """Total genus: sum over components of ``(2 - chi_i) / 2``."""
    comps = len(rs.components())
    return (2 * comps - euler_characteristic(rs)) // 2


def is_plane(rs: RotationSystem) -> bool:
    """Connected and genus 0."""
    return len(rs.components()) == 1 and euler_characteristic(rs) == 2


class PlanarityResult(NamedTuple):
    planar: bool
    rotation: RotationSystem | None


def rotation_from_networkx(emb: nx.PlanarEmbedding, n: int) -> RotationSystem:
    # networkx stores clockwise orders
    rot = []
    for v in range(n):
        if v in emb and emb.degree(v):
            rot.append(tuple(reversed(list(emb.neighbors_cw_order(v)))))
        else:
            rot.append(())
    return RotationSystem(rot)


def is_planar(g: SimpleGraph) -> PlanarityResult:
    """Planarity test with an embedding witness (left-right algorithm via networkx)."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return PlanarityResult(False, None)
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        return PlanarityResult(False, None)
    return PlanarityResult(True, rotation_from_networkx(emb, g.n))


def kuratowski_subgraph(g: SimpleGraph) -> SimpleGraph | None:
    ok, cert = nx.check_planarity(g.to_networkx(), counterexample=True)
    if ok:
        return None
    return SimpleGraph(g.n, frozenset(cert.edges()))
