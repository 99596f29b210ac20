import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from raagcolor.errors import ParseError, PreconditionError
from raagcolor.graph import (Coloring, Graph, min_coloring_oracle, parse_coloring, parse_graph,
                             random_graph, serialize_coloring, serialize_graph,
                             validate_coloring)
from raagcolor.graph import _backtrack

from oracles import brute_chromatic, brute_colorable

K3 = "3 3\n0 1\n1 2\n0 2\n"
C4 = "4 4\n0 1\n1 2\n2 3\n3 0\n"
C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, mask) if b])


def test_parse_examples():
    k3 = parse_graph(K3)
    assert k3.vertex_count == 3 and k3.edges == {(0, 1), (1, 2), (0, 2)}
    two = parse_graph("2 0\n")
    assert two.vertex_count == 2 and not two.edges
    c4 = parse_graph(C4)
    assert c4.sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_duplicates_and_reversed_endpoints_collapse():
    g = parse_graph("3 3\n0 1\n1 0 # again\n2 1\n")
    assert g.sorted_edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text, line", [
    ("3 1\n0 0\n", 2),
    ("3 1\n0 7\n", 2),
    ("3 1\n0 1 2\n", 2),
    ("three 0\n", 1),
    ("3 2\n0 1\n", 1),
])
def test_parse_errors_report_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_dimacs_is_one_indexed():
    g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", "dimacs")
    assert g == parse_graph(K3)
    with pytest.raises(ParseError):
        parse_graph("p edge 3 1\ne 1 1\n", "dimacs")
    with pytest.raises(ParseError):
        parse_graph("p edge 3 1\ne 1 4\n", "dimacs")


def test_named_vertices_use_label_table():
    g = parse_graph("3 2\na b\nb c\n")
    assert g.labels == ("a", "b", "c")
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    c = parse_coloring("a 1\nb 2\nc 1\n", g)
    assert c.assignment == (1, 2, 1)
    assert serialize_coloring(c, g) == "a 1\nb 2\nc 1\n"


@given(graphs(max_n=8), st.sampled_from(["edge-list", "dimacs"]))
def test_serialize_parse_identity(g, fmt):
    assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_graph_invariants():
    with pytest.raises(PreconditionError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(PreconditionError):
        Graph.from_edges(2, [(0, 2)])


def test_validate_coloring_examples():
    k3 = parse_graph(K3)
    assert validate_coloring(k3, Coloring((1, 2, 3), 3))
    assert not validate_coloring(k3, Coloring((1, 1, 2), 2))
    assert validate_coloring(C5, Coloring((1, 2, 1, 2, 3), 3))
    assert not brute_colorable(5, C5.edges, 2)


def test_validate_coloring_errors():
    with pytest.raises(PreconditionError):
        validate_coloring(parse_graph(K3), Coloring((1, 2), 2))
    with pytest.raises(PreconditionError):
        Coloring((1, 4), 3)


def test_oracle_examples():
    c = min_coloring_oracle(parse_graph(K3), 3)
    assert c.color_count == 3 and c.colors_used == 3
    c = min_coloring_oracle(parse_graph(C4), 3)
    assert c.color_count == 2
    assert min_coloring_oracle(C5, 2) is None
    assert min_coloring_oracle(petersen(), 10).color_count == 3


def test_oracle_empty_graph():
    c = min_coloring_oracle(Graph(0), 1)
    assert c.assignment == () and c.color_count == 0


@settings(max_examples=300)
@given(graphs())
def test_oracle_valid_and_minimal(g):
    c = min_coloring_oracle(g, max(g.vertex_count, 1))
    assert validate_coloring(g, c)
    assert c.color_count == brute_chromatic(g.vertex_count, g.edges)
    if c.color_count > 1:
        assert not brute_colorable(g.vertex_count, g.edges, c.color_count - 1)


def _plain_backtrack(adj, n, k):
    colors = [0] * n

    def place(v):
        if v == n:
            return True
        for col in ((1,) if v == 0 else range(1, k + 1)):
            if all(colors[w] != col for w in adj[v] if w < v):
                colors[v] = col
                if place(v + 1):
                    return True
        colors[v] = 0
        return False

    return tuple(colors) if place(0) else None


@pytest.mark.parametrize("seed", range(40))
def test_forward_checking_returns_plain_backtracking_answer(seed):
    g = random_graph(12, 0.35, seed)
    adj = g.neighbors()
    for k in range(1, 5):
        assert _backtrack(adj, 12, k) == _plain_backtrack(adj, 12, k)


def test_random_graph_examples():
    assert random_graph(5, 0.0, 1).edges == frozenset()
    assert len(random_graph(4, 1.0, 1).edges) == 6
    assert random_graph(30, 0.2, 7) == random_graph(30, 0.2, 7)
    with pytest.raises(PreconditionError):
        random_graph(3, 1.5, 0)


def test_coloring_file_roundtrip():
    g = parse_graph(C4)
    c = Coloring((1, 2, 1, 2), 2)
    assert parse_coloring(serialize_coloring(c), g) == c
    with pytest.raises(ParseError):
        parse_coloring("0 1\n1 2\n", g)
    with pytest.raises(ParseError):
        parse_coloring("0 1\n0 2\n1 1\n2 1\n3 1\n", g)


def test_oracle_deterministic():
    g = random_graph(15, 0.3, 3)
    assert min_coloring_oracle(g, 15) == min_coloring_oracle(g, 15)
    assert min_coloring_oracle(g, 15).assignment[0] == 1


def test_brute_oracle_sanity():
    rng = random.Random(0)
    for _ in range(20):
        g = random_graph(6, rng.random(), rng.randrange(1000))
        assert brute_chromatic(6, g.edges) == min_coloring_oracle(g, 6).color_count
