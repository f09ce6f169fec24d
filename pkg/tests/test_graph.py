from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewopt.graph import (
    CliqueLevel,
    PairParityViolation,
    build_graph,
    cartesian_product,
    classify_clique_level,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    even_neighborhood_check,
    hypercube,
    is_connected,
    is_regular,
    path_graph,
    u_graph,
)
from skewopt.canon import are_isomorphic

from conftest import prism3


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_graph_examples():
    k2 = build_graph(2, [(0, 1)])
    assert k2.edges == ((0, 1),)
    k6 = build_graph(6, combinations(range(6), 2))
    assert k6.m == 15 and is_regular(k6, 5)
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.edges == ((0, 1), (0, 3), (1, 2), (2, 3))


@pytest.mark.parametrize("n, edges, msg", [
    (3, [(0, 3)], "outside"),
    (3, [(1, 1)], "self-loop"),
    (3, [(0, 1), (1, 0)], "duplicate"),
])
def test_build_graph_errors(n, edges, msg):
    with pytest.raises(ValueError, match=msg):
        build_graph(n, edges)


def test_even_neighborhood_examples():
    assert even_neighborhood_check(complete_graph(6)) == []
    c5 = even_neighborhood_check(cycle_graph(5))
    # distance-2 pairs of the 5-cycle
    assert c5 == [PairParityViolation(u, v, 1) for u, v in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]]
    assert even_neighborhood_check(hypercube(3)) == []


def test_clique_levels():
    assert classify_clique_level(complete_graph(6)) is CliqueLevel.HAS_K4
    assert classify_clique_level(cycle_graph(4)) is CliqueLevel.TRIANGLE_FREE
    assert classify_clique_level(prism3()) is CliqueLevel.HAS_K3_NO_K4


def test_connected_regular():
    k6 = complete_graph(6)
    assert is_regular(k6, 5) and is_connected(k6)
    two_c4 = disjoint_union(cycle_graph(4), cycle_graph(4))
    assert not is_connected(two_c4)
    assert not is_regular(path_graph(3), 2)


def test_disjoint_union_examples():
    g = disjoint_union(path_graph(2), path_graph(2))
    assert (g.n, g.edges) == (4, ((0, 1), (2, 3)))
    g = disjoint_union(cycle_graph(4), cycle_graph(4))
    assert (g.n, g.m, len(components(g))) == (8, 8, 2)
    g = disjoint_union(hypercube(3), empty_graph(1))
    assert g.n == 9 and g.degree(8) == 0 and g.edges == hypercube(3).edges


def test_cartesian_product_examples():
    p2 = path_graph(2)
    assert are_isomorphic(cartesian_product(p2, p2), cycle_graph(4))
    prism_k4 = cartesian_product(p2, complete_graph(4))
    assert prism_k4.n == 8 and is_regular(prism_k4, 4)
    q = p2
    for _ in range(3):
        q = cartesian_product(q, p2)
    assert q.n == 16 and is_regular(q, 4) and are_isomorphic(q, hypercube(4))


def test_cartesian_product_layout():
    g = cartesian_product(path_graph(2), complete_graph(3))
    # (i, j) -> 3 i + j; rungs join j and 3 + j
    assert all(g.has_edge(j, 3 + j) for j in range(3))
    assert g.has_edge(3, 4) and not g.has_edge(0, 4)


def test_u_graph():
    u3 = u_graph(3)
    assert u3.n == 6 and is_regular(u3, 4)
    u4 = u_graph(4)
    assert u4.n == 8 and u4.degrees() == [4] * 8
    u5 = u_graph(5)
    edge_count = sum(1 for a in range(u5.n) for b in range(a + 1, u5.n) if u5.has_edge(a, b))
    assert (u5.n, edge_count) == (10, 20)
    with pytest.raises(ValueError):
        u_graph(2)


@given(graphs(6), graphs(5))
@settings(max_examples=60, deadline=None)
def test_product_degree_additivity(g, h):
    p = cartesian_product(g, h)
    for i in range(g.n):
        for j in range(h.n):
            assert p.degree(i * h.n + j) == g.degree(i) + h.degree(j)


@given(graphs(), graphs())
@settings(max_examples=80, deadline=None)
def test_union_preserves_parity(g, h):
    u = disjoint_union(g, h)
    assert (not even_neighborhood_check(u)) == (not even_neighborhood_check(g) and not even_neighborhood_check(h))


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_clique_level_consistent(g):
    level = classify_clique_level(g)
    triangles = [t for t in combinations(range(g.n), 3) if all(g.has_edge(a, b) for a, b in combinations(t, 2))]
    k4s = [q for q in combinations(range(g.n), 4) if all(g.has_edge(a, b) for a, b in combinations(q, 2))]
    if k4s:
        assert level is CliqueLevel.HAS_K4
    elif triangles:
        assert level is CliqueLevel.HAS_K3_NO_K4
    else:
        assert level is CliqueLevel.TRIANGLE_FREE
