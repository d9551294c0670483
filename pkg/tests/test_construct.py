import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplanar import construct as cs
from oneplanar import drawing as dr
from oneplanar.bounds import pro1_window
from oneplanar.embed import faces
from oneplanar.errors import (
    BadParameter,
    CrossingEdgeChosen,
    DecompositionFailure,
    EdgeAbsent,
    NotQuadrangulation,
    NotThreeConnected,
)
from oneplanar.graph import complete, connectivity, cycle, is_isomorphic

from conftest import plane


def counts(d):
    return d.n, dr.underlying_graph(d).m, dr.crossing_count(d)


# -- generators --------------------------------------------------------------------


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7, 8])
def test_pdw_family(k):
    d = cs.gen_pdw_optimal(k)
    assert dr.validate(d) == []
    assert counts(d) == (2 * k + 2, 8 * k, 2 * k)
    assert dr.is_maximal(d) and cs.is_optimal(d)
    assert all(x % 2 == 0 for x in dr.underlying_graph(d).degrees())


def test_pdw_needs_k3():
    with pytest.raises(BadParameter):
        cs.gen_pdw_optimal(2)


def test_k2222(k2222):
    assert counts(k2222) == (8, 24, 6)
    assert connectivity(dr.underlying_graph(k2222)) == 6


def test_from_quadrangulation_matches_builtin(k2222):
    assert cs.from_quadrangulation(cs.pseudo_double_wheel(3)) == k2222


def test_cube_quadrangulation():
    d = cs.from_quadrangulation(cs.cube_quadrangulation())
    assert dr.validate(d) == [] and dr.underlying_graph(d).m == 24 == 4 * d.n - 8
    assert dr.is_maximal(d)


def test_hexagon_is_not_a_quadrangulation():
    with pytest.raises(NotQuadrangulation):
        cs.from_quadrangulation(plane(cycle(6)).rs)


def test_square_is_not_three_connected():
    with pytest.raises(NotThreeConnected):
        cs.from_quadrangulation(plane(cycle(4)).rs)


# -- merging -----------------------------------------------------------------------


def test_merge_two_k2222(k2222):
    d = cs.edge_merge(k2222, k2222, cs.default_spec(k2222, k2222))
    assert counts(d) == (14, 47, 12)


def test_merge_degrees(k2222):
    spec = cs.default_spec(k2222, k2222)
    res = cs.merge_with_maps(k2222, k2222, spec)
    deg = dr.underlying_graph(res.drawing).degrees()
    u, v = spec.host_edge
    assert deg[res.host_map[u]] == deg[res.host_map[v]] == 6 + 6 - 1
    assert sorted(x for x in deg if x % 2) == [11, 11]


def test_merge_rejects_crossing_edge(k2222):
    crossed = sorted(k2222.crossing_edges())[0]
    with pytest.raises(CrossingEdgeChosen):
        cs.edge_merge(k2222, k2222, cs.MergeSpec(crossed, k2222.non_crossing_edges()[0]))
    with pytest.raises(CrossingEdgeChosen):
        cs.edge_merge(k2222, k2222, cs.MergeSpec(k2222.non_crossing_edges()[0], crossed))


def test_merge_rejects_missing_edge(k2222):
    g = dr.underlying_graph(k2222)
    missing = next((u, v) for u in range(8) for v in range(u + 1, 8) if not g.has_edge(u, v))
    with pytest.raises(EdgeAbsent):
        cs.edge_merge(k2222, k2222, cs.MergeSpec(missing, k2222.non_crossing_edges()[0]))


def test_merge_either_face_and_mirror(k2222):
    e = k2222.non_crossing_edges()[0]
    for face in (None, 0):
        for mirror in (False, True):
            spec = cs.MergeSpec(e, e, host_face=None if face is None else _face_along(k2222, e), mirror_guest=mirror)
            d = cs.edge_merge(k2222, k2222, spec)
            assert counts(d) == (14, 47, 12) and cs.is_quasi_optimal(d)


def _face_along(d, e):
    return next(i for i, f in enumerate(faces(d.rs)) if (e[1], e[0]) in f.darts)


def test_odd_pair_family(odd_pair):
    assert counts(odd_pair) == (14, 47, 12)
    assert dr.degree_stats(dr.underlying_graph(odd_pair)).odd == 2
    d16 = cs.gen_odd_pair(16)
    assert d16.n == 16 and dr.crossing_count(d16) == 14


@pytest.mark.parametrize("n", [12, 15, 17])
def test_odd_pair_unreachable(n):
    with pytest.raises(BadParameter):
        cs.gen_odd_pair(n)


def test_three_chain(chain3):
    n, m, cr = counts(chain3)
    assert (n, m, cr) == (20, 70, 18)
    assert m == 4 * n - 3 - 7


# -- recognition -------------------------------------------------------------------


def test_is_optimal(k2222, odd_pair, k4):
    assert cs.is_optimal(k2222)
    assert not cs.is_optimal(odd_pair)
    assert not cs.is_optimal(k4)


def test_quasi_optimal_examples(k2222, odd_pair):
    assert cs.is_quasi_optimal(odd_pair) and cs.is_quasi_optimal(k2222)
    u, v = k2222.non_crossing_edges()[0]
    verdict = cs.is_quasi_optimal(dr.delete_edge(k2222, u, v))
    assert not verdict and verdict.reason == cs.NOT_MAXIMAL


def test_crossing_deficit():
    # maximal planar K4 has 0 crossings but n - 2 = 2
    verdict = cs.is_quasi_optimal(plane(complete(4)))
    assert verdict.reason == cs.CROSSING_DEFICIT and verdict.deficit == 2


# -- decomposition -----------------------------------------------------------------


def test_decompose_optimal(k2222):
    dec = cs.decompose(k2222)
    assert dec.k == 1 and dec.tree.m == 0
    assert cs.recompose(dec) == k2222


def test_decompose_odd_pair(odd_pair):
    dec = cs.decompose(odd_pair)
    assert dec.k == 2 and dec.tree.m == 1
    assert all(counts(p)[:2] == (8, 24) for p in dec.pieces)
    r = cs.recompose(dec)
    assert counts(r) == counts(odd_pair)
    assert is_isomorphic(dr.underlying_graph(r), dr.underlying_graph(odd_pair))


def test_decompose_chain(chain3):
    dec = cs.decompose(chain3)
    assert dec.k == 3
    assert sorted(dec.tree.degrees()) == [1, 1, 2]  # a path
    assert cs.associated_graph(dec) == dec.tree


def test_decompose_rejects_non_quasi_optimal(k4):
    with pytest.raises(DecompositionFailure):
        cs.decompose(k4)


def _merge_tree(rng, k):
    pieces = [cs.gen_pdw_optimal(rng.choice((3, 4, 5, 6))) for _ in range(k)]
    acc = pieces[0]
    for p in pieces[1:]:
        spec = cs.MergeSpec(rng.choice(acc.non_crossing_edges()), rng.choice(p.non_crossing_edges()),
                            ordered=rng.random() < 0.5, mirror_guest=rng.random() < 0.5)
        acc = cs.edge_merge(acc, p, spec)
    return acc, pieces


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6))
def test_merge_tree_arithmetic(seed, k):
    d, pieces = _merge_tree(random.Random(seed), k)
    n, m, cr = counts(d)
    assert n == sum(p.n for p in pieces) - 2 * (k - 1)
    assert m == sum(dr.underlying_graph(p).m for p in pieces) - (k - 1)
    assert cr == sum(dr.crossing_count(p) for p in pieces) == n - 2
    lo, hi = pro1_window(n)
    assert lo <= m <= hi
    assert (m == hi) == (k == 1)
    assert (m == lo) == all(p.n == 8 for p in pieces)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 5))
def test_decompose_recompose_roundtrip(seed, k):
    d = cs.random_quasi_optimal(random.Random(seed), k)
    dec = cs.decompose(d)
    assert dec.k == k
    assert all(cs.is_optimal(p) for p in dec.pieces)
    assert dec.tree.m == k - 1 and dec.tree.is_connected()
    r = cs.recompose(dec)
    assert counts(r) == counts(d)
    assert is_isomorphic(dr.underlying_graph(r), dr.underlying_graph(d))
    assert cs.decompose(r).k == k


def _unbalance(rng, d):
    """Remove both edges at a few crossings, then refill preferring uncrossed edges."""
    for _ in range(rng.randint(1, 3)):
        e, f = d.crossing_at(rng.choice(list(d.fakes)))
        d = dr.delete_edge(dr.delete_edge(d, *e), *f)
    while True:
        options = dr.addable_edges(d)
        if not options:
            return d
        plain = [a for a in options if a.crosses is None]
        d = dr.add_edge(d, rng.choice(plain or options))


def test_unbalanced_mutation_is_rejected():
    rng = random.Random(5)
    seen = 0
    for _ in range(60):
        mutated = _unbalance(rng, cs.random_quasi_optimal(rng, rng.randint(1, 3)))
        assert dr.is_maximal(mutated)
        if dr.crossing_count(mutated) < mutated.n - 2:
            seen += 1
            assert cs.is_quasi_optimal(mutated).reason == cs.CROSSING_DEFICIT
            with pytest.raises(DecompositionFailure):
                cs.decompose(mutated)
    assert seen > 0
