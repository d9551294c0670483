"""Optimal drawings, edge merging, and decomposition of quasi-optimal drawings."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .drawing import (
    OnePlaneDrawing,
    crossing_count,
    is_maximal,
    underlying_graph,
)
from .embed import RotationSystem, face_of_dart, faces, is_planar, is_plane
from .errors import (
    BadParameter,
    CrossingEdgeChosen,
    DecompositionFailure,
    EdgeAbsent,
    InvalidDrawing,
    NotQuadrangulation,
    NotThreeConnected,
)
from .graph import SimpleGraph, _norm, complete_multipartite, connectivity, is_isomorphic, separates


# -- optimal drawings -----------------------------------------------------------


def pseudo_double_wheel(k: int) -> RotationSystem:
    """Quadrangulation on a ``2k``-cycle plus two hubs.

    Cycle vertices are ``0..2k-1``; hub ``2k`` sits inside and sees the
    even cycle vertices, hub ``2k+1`` sits outside and sees the odd ones.
    """
    if k < 2:
        raise BadParameter("pseudo double wheel needs k >= 2")
    c = 2 * k
    a, b = c, c + 1
    rot: list[tuple[int, ...]] = []
    for i in range(c):
        nxt, prv = (i + 1) % c, (i - 1) % c
        rot.append((nxt, a, prv) if i % 2 == 0 else (b, nxt, prv))
    rot.append(tuple(range(0, c, 2)))
    rot.append(tuple(range(c - 1, 0, -2)))
    return RotationSystem(rot)


def cube_quadrangulation() -> RotationSystem:
    """The 3-cube graph with its (unique up to mirroring) plane embedding."""
    edges = [(u, u ^ (1 << i)) for u in range(8) for i in range(3) if u < u ^ (1 << i)]
    return is_planar(SimpleGraph(8, frozenset(edges))).rotation


def from_quadrangulation(rs: RotationSystem) -> OnePlaneDrawing:
    """Insert a crossing pair of diagonals into every face of a 3-connected quadrangulation."""
    if not is_plane(rs):
        raise NotQuadrangulation("input is not a connected plane embedding")
    fs = faces(rs)
    for f in fs:
        if len(f) != 4 or len(set(f.walk)) != 4:
            raise NotQuadrangulation(f"face {f.walk} is not a quadrilateral")
    if connectivity(rs.graph()) < 3:
        raise NotThreeConnected("quadrangulation is not 3-connected")
    n = rs.n
    corner_fake: dict[tuple[int, int], int] = {}
    for i, f in enumerate(fs):
        w = f.walk
        for j in range(4):
            corner_fake[(w[j], w[j - 1])] = n + i
    rot: list[tuple[int, ...]] = []
    for v in range(n):
        out = []
        for p in rs.rot[v]:
            out.append(corner_fake[(v, p)])
            out.append(p)
        rot.append(tuple(out))
    rot.extend(f.walk for f in fs)
    return OnePlaneDrawing(RotationSystem(rot), n)


def gen_pdw_optimal(k: int) -> OnePlaneDrawing:
    """Optimal drawing on ``2k + 2`` vertices with ``8k`` edges and ``2k`` crossings."""
    if k < 3:
        raise BadParameter(f"k must be at least 3, got {k}")
    return from_quadrangulation(pseudo_double_wheel(k))


def gen_k2222() -> OnePlaneDrawing:
    d = gen_pdw_optimal(3)
    assert is_isomorphic(underlying_graph(d), complete_multipartite([2, 2, 2, 2]))
    return d


# -- edge merging ---------------------------------------------------------------


@dataclass(frozen=True)
class MergeSpec:
    """How to glue a guest drawing onto a host drawing.

    ``host_face`` indexes ``faces(host.rs)`` and defaults to the
    lowest-indexed face along ``host_edge``. With ``ordered`` the guest
    edge's first endpoint is identified with the host edge's first
    endpoint; otherwise lower ids are identified with lower ids.
    ``mirror_guest`` reflects the guest first, which swaps which of its
    two faces along the guest edge becomes the outer one.
    """

    host_edge: tuple[int, int]
    guest_edge: tuple[int, int]
    host_face: int | None = None
    ordered: bool = False
    mirror_guest: bool = False


def _require_non_crossing(d: OnePlaneDrawing, e: tuple[int, int], role: str) -> None:
    u, v = e
    if not (0 <= u < d.n and 0 <= v < d.n):
        raise EdgeAbsent(f"{role} edge {e} has a non-true endpoint")
    if v in d.rs.pos[u]:
        return
    if _norm(u, v) in d.crossing_edges():
        raise CrossingEdgeChosen(f"{role} edge {e} is crossed")
    raise EdgeAbsent(f"{role} edge {e} not in drawing")


class MergeResult(NamedTuple):
    drawing: OnePlaneDrawing
    host_map: list[int]
    guest_map: list[int]


def merge_with_maps(g1: OnePlaneDrawing, g2: OnePlaneDrawing, spec: MergeSpec) -> MergeResult:
    """:func:`edge_merge` that also returns where every old vertex went."""
    _require_non_crossing(g1, spec.host_edge, "host")
    _require_non_crossing(g2, spec.guest_edge, "guest")
    rs1 = g1.rs
    rs2 = g2.rs.mirror() if spec.mirror_guest else g2.rs
    fs1 = faces(rs1)
    fod = face_of_dart(rs1, fs1)
    x1, y1 = spec.host_edge
    incident = sorted({fod[(x1, y1)], fod[(y1, x1)]})
    host_face = incident[0] if spec.host_face is None else spec.host_face
    if host_face not in incident:
        raise BadParameter(f"face {host_face} does not contain host edge {spec.host_edge}")
    x2, y2 = spec.guest_edge
    if not spec.ordered:
        x1, y1 = sorted((x1, y1))
        x2, y2 = sorted((x2, y2))
    # host face lies left of p -> q
    if fod[(x1, y1)] == host_face:
        p, q, pg, qg = x1, y1, x2, y2
    else:
        p, q, pg, qg = y1, x1, y2, x2

    n1, n2 = g1.n, g2.n
    n = n1 + n2 - 2
    host_map = [v if v < n1 else n + (v - n1) for v in range(rs1.n)]
    guest_map = [0] * rs2.n
    nxt = n1
    for w in range(n2):
        if w == pg:
            guest_map[w] = p
        elif w == qg:
            guest_map[w] = q
        else:
            guest_map[w] = nxt
            nxt += 1
    fake_base = n + (rs1.n - n1)
    for w in range(n2, rs2.n):
        guest_map[w] = fake_base + (w - n2)

    total = fake_base + (rs2.n - n2)
    rot: list[tuple[int, ...]] = [()] * total
    for v in range(rs1.n):
        if v not in (p, q):
            rot[host_map[v]] = tuple(host_map[w] for w in rs1.rot[v])
    for w in range(rs2.n):
        if w not in (pg, qg):
            rot[guest_map[w]] = tuple(guest_map[z] for z in rs2.rot[w])

    def after(r: tuple[int, ...], anchor: int) -> list[int]:
        i = r.index(anchor)
        return list(r[i + 1:] + r[:i])

    a_list = [guest_map[z] for z in after(rs2.rot[pg], qg)]
    b_list = [guest_map[z] for z in after(rs2.rot[qg], pg)]
    rp = [host_map[w] for w in rs1.rot[p]]
    i = rp.index(q)
    rot[p] = tuple(rp[: i + 1] + a_list + rp[i + 1:])
    rq = [host_map[w] for w in rs1.rot[q]]
    i = rq.index(p)
    rot[q] = tuple(rq[:i] + b_list + rq[i:])
    out = OnePlaneDrawing(RotationSystem(rot), n)
    return MergeResult(out, host_map, guest_map)


def edge_merge(g1: OnePlaneDrawing, g2: OnePlaneDrawing, spec: MergeSpec) -> OnePlaneDrawing:
    """Glue ``g2`` into a face of ``g1`` along a pair of uncrossed edges.

    The result has ``n1 + n2 - 2`` true vertices, ``m1 + m2 - 1`` edges and
    ``cr1 + cr2`` crossings.
    """
    out = merge_with_maps(g1, g2, spec).drawing
    bad = out.validate()
    if bad:
        raise InvalidDrawing(bad)
    return out


def default_spec(g1: OnePlaneDrawing, g2: OnePlaneDrawing) -> MergeSpec:
    return MergeSpec(g1.non_crossing_edges()[0], g2.non_crossing_edges()[0])


def gen_odd_pair(n: int) -> OnePlaneDrawing:
    """Quasi-optimal drawing on ``n`` vertices with exactly two odd-degree vertices."""
    if n % 2 or not (n == 14 or n >= 16):
        raise BadParameter(f"no built-in construction for n={n}; need even n = 14 or n >= 16")
    k2 = (n - 2) // 2 - 3
    g1, g2 = gen_pdw_optimal(3), gen_pdw_optimal(k2)
    return edge_merge(g1, g2, default_spec(g1, g2))


def chain(pieces: Sequence[OnePlaneDrawing]) -> OnePlaneDrawing:
    """Merge pieces in a path: each new piece is glued to the previous one.

    The glue edge for piece ``i + 1`` is the first uncrossed edge of piece
    ``i`` other than the edge piece ``i`` was itself glued along.
    """
    acc = pieces[0]
    prev_edges = acc.non_crossing_edges()
    used: tuple[int, int] | None = None
    for piece in pieces[1:]:
        host_edge = next(e for e in prev_edges if e != used)
        guest_edge = piece.non_crossing_edges()[0]
        res = merge_with_maps(acc, piece, MergeSpec(host_edge, guest_edge))
        acc = res.drawing.check()
        gm = res.guest_map
        used = _norm(gm[guest_edge[0]], gm[guest_edge[1]])
        prev_edges = sorted(_norm(gm[u], gm[v]) for u, v in piece.non_crossing_edges())
    return acc


def random_quasi_optimal(rng: random.Random, k: int, wheels: Sequence[int] = (3, 4, 5, 6)) -> OnePlaneDrawing:
    """Random merge tree with ``k`` optimal pieces drawn from the wheel family.

    Host edge, host face, endpoint orientation and guest mirroring are all
    sampled, so an edge may end up shared by more than two pieces.
    """
    acc = gen_pdw_optimal(rng.choice(wheels))
    for _ in range(k - 1):
        piece = gen_pdw_optimal(rng.choice(wheels))
        host_edge = rng.choice(acc.non_crossing_edges())
        fs = faces(acc.rs)
        fod = face_of_dart(acc.rs, fs)
        host_face = rng.choice(sorted({fod[host_edge], fod[host_edge[::-1]]}))
        spec = MergeSpec(
            host_edge,
            rng.choice(piece.non_crossing_edges()),
            host_face=host_face,
            ordered=rng.random() < 0.5,
            mirror_guest=rng.random() < 0.5,
        )
        acc = edge_merge(acc, piece, spec)
    return acc


# -- recognition ----------------------------------------------------------------


def is_optimal(d: OnePlaneDrawing) -> bool:
    g = underlying_graph(d)
    return d.n >= 8 and g.m == 4 * d.n - 8 and is_maximal(d)


class QuasiVerdict(NamedTuple):
    quasi_optimal: bool
    reason: str | None = None
    deficit: int = 0

    def __bool__(self):
        return self.quasi_optimal


NOT_MAXIMAL = "NotMaximal"
CROSSING_DEFICIT = "CrossingDeficit"


def is_quasi_optimal(d: OnePlaneDrawing) -> QuasiVerdict:
    """Maximal and exactly ``n - 2`` crossings."""
    if not is_maximal(d):
        return QuasiVerdict(False, NOT_MAXIMAL)
    deficit = d.n - 2 - crossing_count(d)
    if deficit:
        return QuasiVerdict(False, CROSSING_DEFICIT, deficit)
    return QuasiVerdict(True)


# -- decomposition --------------------------------------------------------------


@dataclass
class Decomposition:
    """Optimal pieces, the uncrossed edges they were glued along, and the merge tree.

    ``vertex_ids[i][v]`` is the original id of true vertex ``v`` of piece
    ``i``; shared edges use original ids.
    """

    pieces: list[OnePlaneDrawing]
    vertex_ids: list[list[int]]
    shared_edges: list[tuple[int, int, tuple[int, int]]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.pieces)

    @property
    def tree(self) -> SimpleGraph:
        return SimpleGraph(self.k, frozenset(_norm(i, j) for i, j, _ in self.shared_edges))

    def piece_edges(self, i: int) -> set[tuple[int, int]]:
        ids = self.vertex_ids[i]
        return {_norm(ids[u], ids[v]) for u, v in underlying_graph(self.pieces[i]).edges}


def associated_graph(dec: Decomposition) -> SimpleGraph:
    """Pieces adjacent when they share an edge.

    Equals the merge tree unless some edge is shared by three or more
    pieces, in which case those pieces form a clique.
    """
    edge_sets = [dec.piece_edges(i) for i in range(dec.k)]
    pairs = {(i, j) for i in range(dec.k) for j in range(i + 1, dec.k) if edge_sets[i] & edge_sets[j]}
    return SimpleGraph(dec.k, frozenset(pairs))


def _components_without(rs: RotationSystem, cut: set[int]) -> list[list[int]]:
    seen = set(cut)
    comps = []
    for s in range(rs.n):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            for w in rs.rot[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def find_split_edge(d: OnePlaneDrawing) -> tuple[int, int] | None:
    """First uncrossed edge whose endpoints separate the underlying graph."""
    g = underlying_graph(d)
    for u, v in d.non_crossing_edges():
        if separates(g, (u, v)):
            return (u, v)
    return None


def decompose(d: OnePlaneDrawing) -> Decomposition:
    """Split a quasi-optimal drawing into optimal pieces along uncrossed 2-cuts."""
    verdict = is_quasi_optimal(d)
    if not verdict:
        raise DecompositionFailure(f"input is not quasi-optimal ({verdict.reason})")
    dec = Decomposition([], [])

    def split(piece: OnePlaneDrawing, ids: list[int]) -> list[int]:
        cut = find_split_edge(piece)
        if cut is None:
            if not is_optimal(piece):
                raise DecompositionFailure(
                    f"piece on original vertices {ids} has no uncrossed 2-cut and is not optimal")
            dec.pieces.append(piece)
            dec.vertex_ids.append(ids)
            return [dec.k - 1]
        u, v = cut
        comps = _components_without(piece.rs, {u, v})
        if len(comps) < 2:
            raise DecompositionFailure(
                f"{{{ids[u]}, {ids[v]}}} separates the graph but crossings join its sides")
        shared = _norm(ids[u], ids[v])
        holders = []
        produced = []
        for comp in comps:
            sub_rs, old = piece.rs.induced(comp + [u, v])
            sub_n = sum(1 for w in old if w < piece.n)
            sub = OnePlaneDrawing(sub_rs, sub_n)
            sub_ids = [ids[w] for w in old[:sub_n]]
            got = split(sub, sub_ids)
            produced.extend(got)
            holders.append(next(i for i in got if shared in dec.piece_edges(i)))
        hub = holders[0]
        for other in holders[1:]:
            dec.shared_edges.append((hub, other, shared))
        return produced

    split(d, list(range(d.n)))
    return dec


def recompose(dec: Decomposition) -> OnePlaneDrawing:
    """Fold the merge tree back together with :func:`edge_merge`."""
    if dec.k == 1:
        return dec.pieces[0]
    acc = dec.pieces[0]
    where = {orig: local for local, orig in enumerate(dec.vertex_ids[0])}
    placed = {0}
    todo = list(dec.shared_edges)
    while todo:
        for idx, (i, j, (a, b)) in enumerate(todo):
            if (i in placed) != (j in placed):
                break
        else:
            raise DecompositionFailure("merge tree is disconnected")
        del todo[idx]
        new = j if i in placed else i
        local = {orig: v for v, orig in enumerate(dec.vertex_ids[new])}
        spec = MergeSpec((where[a], where[b]), (local[a], local[b]), ordered=True)
        res = merge_with_maps(acc, dec.pieces[new], spec)
        acc = res.drawing.check()
        where = {orig: res.host_map[v] for orig, v in where.items()}
        for orig, v in local.items():
            where[orig] = res.guest_map[v]
        placed.add(new)
    # relabel so vertex ids match the original numbering
    perm = list(range(acc.rs.n))
    for orig, v in where.items():
        perm[v] = orig
    return OnePlaneDrawing(acc.rs.relabel(perm), acc.n)
