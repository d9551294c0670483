import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplanar import bounds as bd
from oneplanar import construct as cs
from oneplanar import drawing as dr
from oneplanar.corpus import maximalize, random_drawing
from oneplanar.errors import BadParameter
from oneplanar.graph import complete_multipartite, cycle, star

from conftest import plane


def test_dominating_vertex(k2222):
    assert bd.has_dominating_vertex(star(5)) and bd.dominating_vertex(star(5)) == 0
    assert not bd.has_dominating_vertex(dr.underlying_graph(k2222))
    assert not bd.has_dominating_vertex(cycle(4))


@pytest.mark.parametrize(
    "n, window",
    [
        (14, (Fraction(47), Fraction(48))),
        (20, (Fraction(70), Fraction(72))),
        (8, (Fraction(24), Fraction(24))),
    ],
)
def test_pro1_window(n, window):
    assert bd.pro1_window(n) == window


def test_pro1_window_needs_eight():
    with pytest.raises(BadParameter):
        bd.pro1_window(7)


def test_odd_pair_meets_n_minus_2(odd_pair):
    rep = bd.crossing_upper_bound_report(odd_pair)
    assert rep == bd.BoundReport(12, ())
    assert dr.crossing_count(odd_pair) == rep.bound


def test_seven_vertices_use_cro1():
    rep = bd.crossing_upper_bound_report(plane(cycle(7)))
    assert rep == bd.BoundReport(4, ("cro1",))


def test_dominating_vertex_rule():
    # wheel-like: hub 0 joined to a 9-cycle
    g = complete_multipartite([1, 9])
    g = type(g).from_edges(10, set(g.edges) | set(cycle(10).edges) - {(0, 1), (0, 9)} | {(1, 9)})
    d = maximalize(plane(g))
    rep = bd.crossing_upper_bound_report(d)
    assert "cro2" in rep.rules and rep.bound == d.n - 3


def test_cro3_needs_maximality():
    d = plane(cycle(10))
    assert "cro3" not in bd.crossing_upper_bound_report(d).rules


def test_cro3_on_sparse_maximal_drawing():
    rng = random.Random(3)
    for _ in range(200):
        d = maximalize(random_drawing(rng, rng.randint(8, 12)), rng)
        m = dr.underlying_graph(d).m
        if m < Fraction(23 * d.n, 6) - Fraction(20, 3):
            assert "cro3" in bd.crossing_upper_bound_report(d).rules
            return
    pytest.skip("no sparse maximal drawing sampled")


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 12))
def test_bound_is_sound(seed, n):
    d = random_drawing(random.Random(seed), n)
    rep = bd.crossing_upper_bound_report(d)
    assert dr.crossing_count(d) <= rep.bound
    if n <= 7:
        assert rep.bound == n - 3


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 4))
def test_rules_never_fire_on_quasi_optimal(seed, k):
    d = cs.random_quasi_optimal(random.Random(seed), k)
    assert bd.crossing_upper_bound_report(d).rules == ()
