"""1-plane drawings held as their planarization.

A drawing is a plane rotation system whose vertices ``0..n-1`` are the
true vertices of the graph and whose remaining vertices are fake (one per
crossing). At a fake vertex with rotation ``(s1, s2, s3, s4)`` the two
crossing edges are ``s1 s3`` and ``s2 s4``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .embed import RotationSystem, euler_characteristic, face_of_dart, faces
from .errors import EdgeAbsent, InvalidDrawing, NonIntegerSum
from .graph import SimpleGraph, _norm

FAKE_DEGREE = "FakeDegree"
FAKE_FAKE_ADJACENCY = "FakeFakeAdjacency"
SHARED_ENDPOINT_CROSSING = "SharedEndpointCrossing"
DOUBLE_CROSSING = "DoubleCrossing"
NOT_SIMPLE = "NotSimple"
NOT_CONNECTED = "NotConnected"
GENUS_NON_ZERO = "GenusNonZero"


@dataclass(frozen=True)
class OnePlaneDrawing:
    """Planarization ``rs`` with true vertices ``0..n-1``; the rest are fake."""

    rs: RotationSystem
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= self.rs.n:
            raise ValueError(f"true vertex count {self.n} outside 0..{self.rs.n}")

    @classmethod
    def from_rotation(cls, rot, n: int | None = None) -> "OnePlaneDrawing":
        rs = rot if isinstance(rot, RotationSystem) else RotationSystem(rot)
        return cls(rs, rs.n if n is None else n)

    @property
    def total(self) -> int:
        return self.rs.n

    @property
    def fakes(self) -> range:
        return range(self.n, self.rs.n)

    def is_fake(self, v: int) -> bool:
        return v >= self.n

    def non_crossing_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.rs.darts() if u < v < self.n)

    def crossings(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Edge pair crossing at each fake vertex, in fake-id order."""
        out = []
        for c in self.fakes:
            s1, s2, s3, s4 = self.rs.rot[c]
            out.append((_norm(s1, s3), _norm(s2, s4)))
        return out

    def crossing_at(self, c: int) -> tuple[tuple[int, int], tuple[int, int]]:
        s1, s2, s3, s4 = self.rs.rot[c]
        return (_norm(s1, s3), _norm(s2, s4))

    def crossing_edges(self) -> set[tuple[int, int]]:
        return {e for pair in self.crossings() for e in pair}

    def degree(self, v: int) -> int:
        return self.rs.degree(v)

    def validate(self) -> list["Violation"]:
        return validate(self)

    def check(self) -> "OnePlaneDrawing":
        bad = validate(self)
        if bad:
            raise InvalidDrawing(bad)
        return self


class Violation(NamedTuple):
    code: str
    where: tuple
    message: str


def validate(d: OnePlaneDrawing) -> list[Violation]:
    """All invariant violations of ``d``; an empty list means valid."""
    out: list[Violation] = []
    rs = d.rs
    recovered: list[tuple[int, int]] = []
    seen_pairs: dict[frozenset, int] = {}
    for c in d.fakes:
        nbrs = rs.rot[c]
        if len(nbrs) != 4:
            out.append(Violation(FAKE_DEGREE, (c,), f"fake vertex {c} has degree {len(nbrs)}"))
            continue
        fake_nbrs = [w for w in nbrs if d.is_fake(w)]
        if fake_nbrs:
            for w in fake_nbrs:
                if w > c or len(rs.rot[w]) != 4:
                    out.append(Violation(FAKE_FAKE_ADJACENCY, (c, w), f"fake vertices {c} and {w} are adjacent"))
            continue
        e, f = d.crossing_at(c)
        if set(e) & set(f):
            shared = sorted(set(e) & set(f))
            out.append(Violation(SHARED_ENDPOINT_CROSSING, (c, *shared),
                                 f"edges {e} and {f} crossing at {c} share endpoint {shared[0]}"))
            continue
        key = frozenset((e, f))
        if key in seen_pairs:
            out.append(Violation(DOUBLE_CROSSING, (seen_pairs[key], c), f"edges {e} and {f} cross twice"))
            continue
        seen_pairs[key] = c
        recovered.extend((e, f))
    counts = Counter(recovered)
    counts.update(d.non_crossing_edges())
    for e, k in sorted(counts.items()):
        if k > 1:
            out.append(Violation(NOT_SIMPLE, e, f"edge {e} is realised {k} times"))
    comps = rs.components()
    if len(comps) > 1:
        out.append(Violation(NOT_CONNECTED, tuple(c[0] for c in comps), f"{len(comps)} components"))
    if euler_characteristic(rs) != 2 * len(comps):
        out.append(Violation(GENUS_NON_ZERO, (), "rotation system is not spherical"))
    return out


def underlying_graph(d: OnePlaneDrawing) -> SimpleGraph:
    edges = set(d.non_crossing_edges())
    for e, f in d.crossings():
        edges.add(e)
        edges.add(f)
    return SimpleGraph(d.n, frozenset(edges))


def crossing_count(d: OnePlaneDrawing) -> int:
    return d.rs.n - d.n


# -- faces ----------------------------------------------------------------------


class FaceInfo(NamedTuple):
    boundary: tuple[int, ...]
    size: int
    eps: int

    @property
    def is_odd(self) -> bool:
        return self.eps % 2 == 1


def face_census(d: OnePlaneDrawing) -> list[FaceInfo]:
    """One record per face of the planarization; counts are of distinct vertices."""
    out = []
    for f in faces(d.rs):
        distinct = set(f.walk)
        out.append(FaceInfo(f.walk, len(distinct), sum(1 for v in distinct if v < d.n)))
    return out


def lemma_c_rhs(d: OnePlaneDrawing) -> int:
    """``n - 2 - (1/2) * sum_F (eps(F) - 2)`` from the face census alone."""
    total = sum(f.eps - 2 for f in face_census(d))
    if total % 2:
        raise NonIntegerSum(f"sum of (eps - 2) over faces is odd ({total})")
    return d.n - 2 - total // 2


def odd_face_count(d: OnePlaneDrawing) -> int:
    return sum(1 for f in face_census(d) if f.is_odd)


# -- maximality -----------------------------------------------------------------


class Addition(NamedTuple):
    """A pair that can be joined; ``crosses`` is the non-crossing edge it would cross."""

    u: int
    v: int
    crosses: tuple[int, int] | None = None

    @property
    def mode(self) -> str:
        return "plain" if self.crosses is None else f"crossing {self.crosses[0]}-{self.crosses[1]}"


def addable_edges(d: OnePlaneDrawing) -> list[Addition]:
    """Every way to add a new edge while keeping a simple good 1-plane drawing.

    Plain additions join two true vertices of a common face. A crossing
    addition routes from a face on one side of an uncrossed edge ``xy``
    to the face on the other side, with both ends off ``{x, y}``. Edges
    with the same face on both sides are never crossed.
    """
    fs = faces(d.rs)
    fod = face_of_dart(d.rs, fs)
    adj = underlying_graph(d).adjacency()
    true_on = [sorted({v for v in f.walk if v < d.n}) for f in fs]
    found: set[Addition] = set()
    for tv in true_on:
        for u, v in itertools.combinations(tv, 2):
            if v not in adj[u]:
                found.add(Addition(u, v))
    for x, y in d.non_crossing_edges():
        f1, f2 = fod[(x, y)], fod[(y, x)]
        if f1 == f2:
            continue
        for u in true_on[f1]:
            if u in (x, y):
                continue
            for v in true_on[f2]:
                if v in (x, y) or v == u or v in adj[u]:
                    continue
                found.add(Addition(*_norm(u, v), (x, y)))
    return sorted(found, key=lambda a: (a.u, a.v, a.crosses or ()))


def is_maximal(d: OnePlaneDrawing) -> bool:
    return not addable_edges(d)


# -- degree statistics ----------------------------------------------------------


class DegreeStats(NamedTuple):
    deg2: int
    deg4: int
    odd: int
    histogram: dict[int, int]


def degree_stats(g: SimpleGraph) -> DegreeStats:
    deg = g.degrees()
    hist = dict(sorted(Counter(deg).items()))
    return DegreeStats(hist.get(2, 0), hist.get(4, 0), sum(1 for x in deg if x % 2), hist)


def problem1_bound(g: SimpleGraph) -> Fraction:
    """``n - 2 - (2*l1 + 2*l2 + l3) / 6`` with l3 counting every odd-degree vertex."""
    s = degree_stats(g)
    return Fraction(g.n - 2) - Fraction(2 * s.deg2 + 2 * s.deg4 + s.odd, 6)


# -- editing --------------------------------------------------------------------


def _corner(rs: RotationSystem, walk: tuple[int, ...], v: int) -> int:
    """Index in ``rot[v]`` at which to insert so the new dart enters this face."""
    i = walk.index(v)
    prev = walk[i - 1]
    return rs.pos[v][prev]


def add_edge(d: OnePlaneDrawing, a: Addition) -> OnePlaneDrawing:
    """Apply an :class:`Addition` returned by :func:`addable_edges`."""
    rs = d.rs
    rot = [list(r) for r in rs.rot]
    fs = faces(rs)
    u, v = a.u, a.v
    if a.crosses is None:
        for f in fs:
            if u in f.walk and v in f.walk:
                iu, iv = _corner(rs, f.walk, u), _corner(rs, f.walk, v)
                rot[u].insert(iu, v)
                rot[v].insert(iv, u)
                return OnePlaneDrawing(RotationSystem(rot), d.n)
        raise EdgeAbsent(f"no face contains both {u} and {v}")
    x, y = a.crosses
    fod = face_of_dart(rs, fs)
    left, right = fs[fod[(x, y)]], fs[fod[(y, x)]]
    if u in left.walk and v in right.walk:
        pass
    elif v in left.walk and u in right.walk:
        u, v = v, u
    else:
        raise EdgeAbsent(f"{a.u} and {a.v} are not on opposite sides of {x}-{y}")
    c = rs.n
    iu, iv = _corner(rs, left.walk, u), _corner(rs, right.walk, v)
    rot[u].insert(iu, c)
    rot[v].insert(iv, c)
    rot[x][rs.pos[x][y]] = c
    rot[y][rs.pos[y][x]] = c
    # u lies left of x->y
    rot.append([x, v, y, u])
    return OnePlaneDrawing(RotationSystem(rot), d.n)


def delete_edge(d: OnePlaneDrawing, u: int, v: int) -> OnePlaneDrawing:
    """Remove edge ``uv``; deleting a crossing edge also removes its crossing."""
    rs = d.rs
    rot = [list(r) for r in rs.rot]
    if v in rs.pos[u]:
        rot[u].remove(v)
        rot[v].remove(u)
        return OnePlaneDrawing(RotationSystem(rot), d.n)
    target = _norm(u, v)
    for c in d.fakes:
        e, f = d.crossing_at(c)
        if target not in (e, f):
            continue
        x, y = f if target == e else e
        rot[x][rs.pos[x][c]] = y
        rot[y][rs.pos[y][c]] = x
        rot[u].remove(c)
        rot[v].remove(c)
        del rot[c]
        shift = [w if w < c else w - 1 for w in range(rs.n)]
        rot = [[shift[w] for w in r] for r in rot]
        return OnePlaneDrawing(RotationSystem(rot), d.n)
    raise EdgeAbsent(f"edge {u}-{v} not in drawing")


def planar_drawing(g: SimpleGraph) -> OnePlaneDrawing:
    """Crossing-free drawing of a connected planar graph."""
    from .embed import is_planar

    res = is_planar(g)
    if not res.planar:
        raise ValueError("graph is not planar")
    return OnePlaneDrawing(res.rotation, g.n)
