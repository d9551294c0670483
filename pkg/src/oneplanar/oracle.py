"""Exact crossing number and 1-planarity for small graphs.

A crossing plan fixes which pairs of independent edges cross and, for an
edge crossed several times, the order of its crossings. Replacing every
planned crossing by a degree-4 vertex gives the plan's planarization; the
graph has a drawing with at most ``k`` crossings iff some plan with at most
``k`` pairs has a planar planarization (a planned pair whose vertex does not
alternate in the embedding is a touching and can be pulled apart).

The search grows plans one crossing at a time. While the current
planarization is non-planar it extracts a Kuratowski subgraph: any drawing
extending the plan must cross two segments of that subgraph, so it branches
over those segment pairs only. Plans equivalent under an automorphism of
the input graph are explored once.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from .drawing import OnePlaneDrawing
from .embed import RotationSystem, euler_characteristic, is_planar
from .errors import SearchBudgetExceeded
from .graph import SimpleGraph, _norm, complete, cycle, is_isomorphic, path

log = logging.getLogger(__name__)

Edge = tuple[int, int]

DEFAULT_BUDGET = 10**8
MAX_AUTOMORPHISMS = 1000


@dataclass(frozen=True)
class CrossingPlan:
    """Crossing pairs plus, per edge, the order of its partners from its lower endpoint.

    ``orders`` may omit edges crossed at most once.
    """

    pairs: tuple[tuple[Edge, Edge], ...]
    orders: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        normed = []
        for e, f in self.pairs:
            e, f = _norm(*e), _norm(*f)
            normed.append((e, f) if e < f else (f, e))
        object.__setattr__(self, "pairs", tuple(normed))

    def __len__(self):
        return len(self.pairs)

    def partners(self) -> dict[Edge, list[Edge]]:
        out: dict[Edge, list[Edge]] = {}
        for e, f in self.pairs:
            out.setdefault(e, []).append(f)
            out.setdefault(f, []).append(e)
        return out

    def order_of(self, e: Edge) -> tuple[Edge, ...]:
        e = _norm(*e)
        got = self.orders.get(e)
        if got is not None:
            return tuple(_norm(*f) for f in got)
        ps = self.partners().get(e, [])
        if len(ps) > 1:
            raise ValueError(f"edge {e} is crossed {len(ps)} times but has no order")
        return tuple(ps)

    def check(self, g: SimpleGraph) -> None:
        if len(set(self.pairs)) != len(self.pairs):
            raise ValueError("repeated crossing pair")
        for e, f in self.pairs:
            if e not in g.edges or f not in g.edges:
                raise ValueError(f"pair {e}, {f} uses a non-edge")
            if set(e) & set(f):
                raise ValueError(f"edges {e} and {f} share an endpoint")
        for e, ps in self.partners().items():
            if sorted(self.order_of(e)) != sorted(ps):
                raise ValueError(f"order for {e} does not list its partners")


def gadget_planarization(g: SimpleGraph, plan: CrossingPlan) -> SimpleGraph:
    """Subdivide each planned crossing into one shared degree-4 vertex.

    Crossing ``i`` of ``plan.pairs`` becomes vertex ``g.n + i``.
    """
    plan.check(g)
    index = {pair: i for i, pair in enumerate(plan.pairs)}
    edges = set()
    for e in g.edges:
        chain = [e[0]]
        for f in plan.order_of(e):
            chain.append(g.n + index[(e, f) if e < f else (f, e)])
        chain.append(e[1])
        edges.update(_norm(a, b) for a, b in zip(chain, chain[1:]))
    return SimpleGraph(g.n + len(plan), frozenset(edges))


class CrWitness(NamedTuple):
    plan: CrossingPlan
    rotation: RotationSystem

    @property
    def crossings(self) -> int:
        return len(self.plan)


def _alternates(rot: Sequence[int], owner: dict[int, Edge]) -> bool:
    tags = [owner[w] for w in rot]
    return tags[0] == tags[2] and tags[1] == tags[3] and tags[0] != tags[1]


def _segment_owner(g: SimpleGraph, plan: CrossingPlan) -> dict[int, dict[int, Edge]]:
    """For each crossing vertex, which edge each of its four neighbours lies on."""
    index = {pair: i for i, pair in enumerate(plan.pairs)}
    owner: dict[int, dict[int, Edge]] = {}
    for e in g.edges:
        chain = [e[0]] + [g.n + index[(e, f) if e < f else (f, e)] for f in plan.order_of(e)] + [e[1]]
        for i in range(1, len(chain) - 1):
            owner.setdefault(chain[i], {})[chain[i - 1]] = e
            owner.setdefault(chain[i], {})[chain[i + 1]] = e
    return owner


def resolve_touchings(g: SimpleGraph, plan: CrossingPlan) -> CrWitness | None:
    """Embed the plan's planarization, dropping pairs that only touch.

    Returns None if the planarization is not planar.
    """
    while True:
        res = is_planar(gadget_planarization(g, plan))
        if not res.planar:
            return None
        owner = _segment_owner(g, plan)
        bad = [i for i in range(len(plan)) if not _alternates(res.rotation.rot[g.n + i], owner[g.n + i])]
        if not bad:
            return CrWitness(plan, res.rotation)
        drop = plan.pairs[bad[0]]
        kept = tuple(p for p in plan.pairs if p != drop)
        orders = {e: tuple(f for f in plan.order_of(e) if (e, f) != drop and (f, e) != drop)
                  for e in plan.partners()}
        plan = CrossingPlan(kept, orders)


def verify_witness(g: SimpleGraph, w: CrWitness, k: int | None = None) -> bool:
    """Independent re-check of a witness: spherical, matches the plan, every crossing alternates."""
    if k is not None and len(w.plan) > k:
        return False
    gp = gadget_planarization(g, w.plan)
    if w.rotation.graph() != gp:
        return False
    comps = len(w.rotation.components())
    if euler_characteristic(w.rotation) != 2 * comps:
        return False
    owner = _segment_owner(g, w.plan)
    return all(_alternates(w.rotation.rot[g.n + i], owner[g.n + i]) for i in range(len(w.plan)))


# -- search -----------------------------------------------------------------------


def _edge_automorphisms(g: SimpleGraph, edges: list[Edge], limit: int) -> list[tuple[list[int], list[bool]]]:
    eid = {e: i for i, e in enumerate(edges)}
    out = []
    for mp in itertools.islice(GraphMatcher(g.to_networkx(), g.to_networkx()).isomorphisms_iter(), limit):
        perm, flip = [], []
        for a, b in edges:
            x, y = mp[a], mp[b]
            perm.append(eid[_norm(x, y)])
            flip.append(x > y)
        out.append((perm, flip))
    return out


class _Search:
    def __init__(self, g: SimpleGraph, one_planar: bool, budget: int):
        self.g = g
        self.one_planar = one_planar
        self.budget = budget
        self.nodes = 0
        self.edges = g.sorted_edges()
        self.auts = _edge_automorphisms(g, self.edges, MAX_AUTOMORPHISMS)

    def _key(self, seqs: list[tuple[int, ...]]) -> tuple:
        best = None
        for perm, flip in self.auts:
            new: list = [None] * len(seqs)
            for i, s in enumerate(seqs):
                t = tuple(perm[p] for p in s)
                new[perm[i]] = t[::-1] if flip[i] else t
            t = tuple(new)
            if best is None or t < best:
                best = t
        return best

    def _graph(self, chains: list[tuple[int, ...]]) -> tuple[nx.Graph, dict]:
        h = nx.Graph()
        h.add_nodes_from(range(self.g.n))
        owner = {}
        for i, ch in enumerate(chains):
            for a, b in zip(ch, ch[1:]):
                h.add_edge(a, b)
                owner[frozenset((a, b))] = i
        return h, owner

    def _plan(self, chains, crossings) -> CrossingPlan:
        pairs = tuple((self.edges[e], self.edges[f]) for e, f in crossings)
        orders = {}
        n = self.g.n
        for i, ch in enumerate(chains):
            if len(ch) > 2:
                orders[self.edges[i]] = tuple(
                    self.edges[crossings[c - n][1] if crossings[c - n][0] == i else crossings[c - n][0]]
                    for c in ch[1:-1])
        return CrossingPlan(pairs, orders)

    def run(self, k: int) -> CrossingPlan | None:
        g = self.g
        if g.n >= 3 and g.m - (3 * g.n - 6) > k:
            return None
        visited: set = set()
        n = g.n
        edges = self.edges
        shares = [[bool(set(e) & set(f)) for f in edges] for e in edges]

        def rec(chains, crossings, crossed) -> CrossingPlan | None:
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(self.budget, k)
            h, owner = self._graph(chains)
            j = len(crossings)
            if j == k:
                return self._plan(chains, crossings) if nx.check_planarity(h)[0] else None
            planar, cert = nx.check_planarity(h, counterexample=True)
            if planar:
                return self._plan(chains, crossings)
            segs = sorted((owner[frozenset(s)], tuple(sorted(s))) for s in cert.edges())
            for (e, s), (f, t) in itertools.combinations(segs, 2):
                if e == f or shares[e][f] or (min(e, f), max(e, f)) in crossed:
                    continue
                if self.one_planar and (len(chains[e]) > 2 or len(chains[f]) > 2):
                    continue
                c = n + j
                new = list(chains)
                for idx, seg in ((e, s), (f, t)):
                    ch = list(new[idx])
                    for p in range(len(ch) - 1):
                        if {ch[p], ch[p + 1]} == set(seg):
                            ch.insert(p + 1, c)
                            break
                    new[idx] = tuple(ch)
                new_cross = crossings + [(e, f)]
                seqs = []
                for i, ch in enumerate(new):
                    seqs.append(tuple(new_cross[v - n][1] if new_cross[v - n][0] == i else new_cross[v - n][0]
                                      for v in ch[1:-1]))
                key = self._key(seqs)
                if key in visited:
                    continue
                visited.add(key)
                got = rec(new, new_cross, crossed | {(min(e, f), max(e, f))})
                if got is not None:
                    return got
            return None

        return rec([tuple(e) for e in edges], [], frozenset())


def euler_lower_bound(g: SimpleGraph) -> int:
    return max(0, g.m - 3 * g.n + 6) if g.n >= 3 else 0


def cr_at_most(g: SimpleGraph, k: int, budget: int = DEFAULT_BUDGET) -> CrWitness | None:
    """A drawing with at most ``k`` crossings, or None if none exists."""
    if k < 0:
        raise ValueError("k must be non-negative")
    plan = _Search(g, False, budget).run(k)
    if plan is None:
        return None
    return resolve_touchings(g, plan)


@dataclass
class CrossingNumberReport:
    """``value`` is exact when set; otherwise only ``lower_bound`` is known."""

    value: int | None
    lower_bound: int
    witness: CrWitness | None
    refuted: list[int]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.value is not None


def witness_from_drawing(d: OnePlaneDrawing) -> CrWitness:
    """Read a 1-plane drawing as a crossing plan with its embedding."""
    return CrWitness(CrossingPlan(tuple(d.crossings())), d.rs)


def crossing_number(g: SimpleGraph, k_max: int = 10, budget: int = DEFAULT_BUDGET,
                    upper: OnePlaneDrawing | None = None) -> CrossingNumberReport:
    """Smallest ``k <= k_max`` admitting a drawing, starting at the Euler bound.

    The node budget is shared across all values of ``k`` tried. A drawing
    of ``g`` passed as ``upper`` ends the search without branching when its
    crossing count already meets the Euler bound.
    """
    start = euler_lower_bound(g)
    if upper is not None:
        w = witness_from_drawing(upper)
        if not verify_witness(g, w):
            raise ValueError("upper-bound drawing is not a drawing of g")
        if w.crossings == start:
            return CrossingNumberReport(start, start, w, [], 0)
    search = _Search(g, False, budget)
    refuted = []
    for k in range(start, k_max + 1):
        plan = search.run(k)
        log.debug("k=%d: %s after %d nodes", k, "found" if plan else "refuted", search.nodes)
        if plan is not None:
            return CrossingNumberReport(k, k, resolve_touchings(g, plan), refuted, search.nodes)
        refuted.append(k)
    return CrossingNumberReport(None, k_max + 1 if start <= k_max else start, None, refuted, search.nodes)


def is_one_planar(g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> OnePlaneDrawing | None:
    """A 1-planar drawing of ``g`` as its planarization, or None.

    Vertex ids ``0..n-1`` of the drawing are those of ``g``. For a
    disconnected ``g`` the returned drawing has several components.
    """
    if g.n >= 3 and g.m > 4 * g.n - 8:
        return None
    plan = _Search(g, True, budget).run(g.m // 2)
    if plan is None:
        return None
    w = resolve_touchings(g, plan)
    return OnePlaneDrawing(w.rotation, g.n)


# -- brute force cross-check --------------------------------------------------------


def independent_pairs(g: SimpleGraph) -> list[tuple[Edge, Edge]]:
    edges = g.sorted_edges()
    return [(e, f) for e, f in itertools.combinations(edges, 2) if not set(e) & set(f)]


def _plans_of_size(g: SimpleGraph, j: int) -> Iterator[CrossingPlan]:
    for pairs in itertools.combinations(independent_pairs(g), j):
        plan = CrossingPlan(pairs)
        multi = [(e, ps) for e, ps in plan.partners().items() if len(ps) > 1]
        for perms in itertools.product(*(itertools.permutations(ps) for _, ps in multi)):
            yield CrossingPlan(pairs, {e: p for (e, _), p in zip(multi, perms)})


def crossing_number_bruteforce(g: SimpleGraph, k_max: int) -> int | None:
    """Exhaustive enumeration of every plan with every crossing order; no pruning."""
    for j in range(k_max + 1):
        for plan in _plans_of_size(g, j):
            if is_planar(gadget_planarization(g, plan)).planar:
                return j
    return None


# -- seven-vertex census --------------------------------------------------------------


@dataclass
class CensusReport:
    total: int
    two_matching: int
    max_degree_3: int
    exceptional: dict[str, int]
    unclassified: int

    @property
    def passed(self) -> bool:
        return self.unclassified == 0 and self.total == 2**21 and \
            self.two_matching + self.max_degree_3 + sum(self.exceptional.values()) == self.total


EXCEPTIONS = {
    "empty": SimpleGraph(7),
    "K2": SimpleGraph(7, frozenset({(0, 1)})),
    "P3": SimpleGraph(7, path(3).edges),
    "K3": SimpleGraph(7, cycle(3).edges),
}


def seven_vertex_census() -> CensusReport:
    """Classify every edge set ``H`` of ``K_7`` (the graph being ``K_7 - H``).

    Either ``H`` holds two independent edges (so ``K_7 - H`` lies inside
    ``K_7 - 2K_2``), or a vertex of degree at least 3 (inside
    ``K_7 - K_{1,3}``), or ``H`` is one of the four exceptional graphs.
    """
    edges = complete(7).sorted_edges()
    masks = np.arange(2**21, dtype=np.int64)
    bits = [(masks >> i) & 1 for i in range(21)]
    deg = np.zeros((7, masks.size), dtype=np.int8)
    for i, (u, v) in enumerate(edges):
        deg[u] += bits[i].astype(np.int8)
        deg[v] += bits[i].astype(np.int8)
    two = np.zeros(masks.size, dtype=bool)
    for i, j in itertools.combinations(range(21), 2):
        if not set(edges[i]) & set(edges[j]):
            two |= (bits[i] & bits[j]).astype(bool)
    high = (deg.max(axis=0) >= 3) & ~two
    rest = np.flatnonzero(~two & ~high)
    exceptional = {name: 0 for name in EXCEPTIONS}
    unclassified = 0
    for mask in rest:
        h = SimpleGraph(7, frozenset(e for i, e in enumerate(edges) if (int(mask) >> i) & 1))
        for name, ref in EXCEPTIONS.items():
            if is_isomorphic(h, ref):
                exceptional[name] += 1
                break
        else:
            unclassified += 1
    return CensusReport(int(masks.size), int(two.sum()), int(high.sum()), exceptional, unclassified)
