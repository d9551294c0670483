"""Simple undirected graphs, named families and the graph text format."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from .errors import EdgeAbsent, ParseError


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs; loops and out-of-range endpoints are
    rejected at construction. Repeated pairs in the input collapse, so use
    :func:`parse_graph` when duplicates must be reported as errors.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        normed = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


# -- named families ---------------------------------------------------------


def complete(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(itertools.combinations(range(n), 2)))


def complete_multipartite(parts: Iterable[int]) -> SimpleGraph:
    parts = list(parts)
    if any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    n = len(label)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if label[u] != label[v]]
    return SimpleGraph(n, frozenset(edges))


def path(n: int) -> SimpleGraph:
    """Path on ``n`` vertices (``P_n``)."""
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def matching(k: int) -> SimpleGraph:
    """``k`` independent edges (``kK_2``)."""
    return SimpleGraph(2 * k, frozenset((2 * i, 2 * i + 1) for i in range(k)))


def remove_edges(g: SimpleGraph, sub: SimpleGraph | Iterable[tuple[int, int]]) -> SimpleGraph:
    """Return ``g - H``: delete the edges of ``sub`` (vertex ids shared with ``g``)."""
    pairs = sub.edges if isinstance(sub, SimpleGraph) else {_norm(u, v) for u, v in sub}
    missing = [e for e in pairs if e not in g.edges]
    if missing:
        raise EdgeAbsent(f"edges not present: {sorted(missing)}")
    return SimpleGraph(g.n, g.edges - frozenset(pairs))


def embed_into(sub: SimpleGraph, n: int, offset: int = 0) -> SimpleGraph:
    """Place a small graph on vertices ``offset..`` of an ``n``-vertex host."""
    return SimpleGraph(n, frozenset((u + offset, v + offset) for u, v in sub.edges))


# -- connectivity and isomorphism ---------------------------------------------


def connectivity(g: SimpleGraph) -> int:
    """Exact vertex connectivity.

    Complete graphs have connectivity ``n - 1`` and disconnected graphs 0.
    """
    if g.n <= 1:
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    return nx.node_connectivity(g.to_networkx())


def separates(g: SimpleGraph, cut: Iterable[int]) -> bool:
    """True if deleting ``cut`` leaves at least two components."""
    cut = set(cut)
    rest = [v for v in range(g.n) if v not in cut]
    if len(rest) < 2:
        return False
    adj = g.adjacency()
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in cut and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) < len(rest)


def is_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


# -- text format ----------------------------------------------------------------


def format_graph(g: SimpleGraph) -> str:
    lines = [f"graph {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    n = None
    edges: set[tuple[int, int]] = set()
    ended = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise ParseError("content after 'end'", lineno)
        tok = line.split()
        try:
            if n is None:
                if tok[0] != "graph" or len(tok) != 2:
                    raise ParseError("expected header 'graph <n>'", lineno)
                n = int(tok[1])
                if n < 0:
                    raise ParseError("negative vertex count", lineno)
            elif tok[0] == "e" and len(tok) == 3:
                u, v = int(tok[1]), int(tok[2])
                if u == v:
                    raise ParseError(f"loop at vertex {u}", lineno)
                if not (0 <= u < n and 0 <= v < n):
                    raise ParseError(f"vertex out of range in edge {u} {v}", lineno)
                e = _norm(u, v)
                if e in edges:
                    raise ParseError(f"duplicate edge {u} {v}", lineno)
                edges.add(e)
            elif tok == ["end"]:
                ended = True
            else:
                raise ParseError(f"unrecognised line {line!r}", lineno)
        except ValueError as exc:
            raise ParseError(f"bad integer: {exc}", lineno) from None
    if n is None:
        raise ParseError("missing header")
    if not ended:
        raise ParseError("missing 'end'")
    return SimpleGraph(n, frozenset(edges))
