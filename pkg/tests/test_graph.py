import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplanar.errors import EdgeAbsent, ParseError
from oneplanar.graph import (
    SimpleGraph,
    complete,
    complete_multipartite,
    connectivity,
    cycle,
    embed_into,
    format_graph,
    is_isomorphic,
    matching,
    parse_graph,
    path,
    remove_edges,
    separates,
    star,
)


def test_edges_are_normalised():
    g = SimpleGraph.from_edges(3, [(2, 0), (1, 2)])
    assert g.edges == {(0, 2), (1, 2)}
    assert g.has_edge(2, 0) and not g.has_edge(0, 1)


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 3)], [(-1, 0)]])
def test_rejects_loops_and_out_of_range(edges):
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, edges)


def test_named_graphs():
    assert complete(6).m == 15
    assert cycle(5).degrees() == [2] * 5
    assert path(3).m == 2
    assert star(3).degrees() == [3, 1, 1, 1]
    assert matching(2).edges == {(0, 1), (2, 3)}
    assert complete_multipartite([2, 2, 2, 2]).m == 24


def test_k7_minus_c3_is_k11113():
    g = remove_edges(complete(7), cycle(3))
    assert g.m == 18
    assert is_isomorphic(g, complete_multipartite([1, 1, 1, 1, 3]))


def test_k7_minus_2k2():
    assert remove_edges(complete(7), matching(2)).m == 19


def test_remove_missing_edge():
    with pytest.raises(EdgeAbsent):
        remove_edges(cycle(5), [(0, 2)])


def test_embed_into_offsets():
    assert embed_into(path(2), 5, offset=3).edges == {(3, 4)}


@pytest.mark.parametrize(
    "g, kappa",
    [
        (cycle(5), 2),
        (path(4), 1),
        (complete(5), 4),
        (complete_multipartite([2, 2, 2, 2]), 6),
        (SimpleGraph(3), 0),
    ],
)
def test_connectivity_examples(g, kappa):
    assert connectivity(g) == kappa


def test_separates():
    assert separates(cycle(6), [0, 3])
    assert not separates(cycle(6), [0, 1])


def _brute_connectivity(g: SimpleGraph) -> int:
    if g.m == g.n * (g.n - 1) // 2:
        return max(g.n - 1, 0)
    for k in range(g.n):
        for cut in itertools.combinations(range(g.n), k):
            if separates(g, cut):
                return k
    return g.n - 1


graphs = st.integers(2, 7).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]))
    .map(lambda es: SimpleGraph.from_edges(n, {tuple(sorted(e)) for e in es}))
)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_connectivity_matches_brute_force(g):
    k = connectivity(g)
    assert k == _brute_connectivity(g)
    assert k <= min(g.degrees())


def test_graph_format_roundtrip():
    g = complete_multipartite([1, 2, 3])
    assert parse_graph(format_graph(g)) == g


def test_graph_format_comments_and_whitespace():
    text = "# a path\ngraph 3\n  e 0 1   # first\ne 1 2\nend\n"
    assert parse_graph(text) == path(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("graph 3\ne 0 1\ne 1 0\nend\n", 3),
        ("graph 3\ne 2 2\nend\n", 2),
        ("graph 3\ne 0 5\nend\n", 2),
        ("grph 3\nend\n", 1),
    ],
)
def test_graph_format_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line
