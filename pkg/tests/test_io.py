import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewopt.constructions import paper_matrix
from skewopt.graph import build_graph, complete_graph, empty_graph
from skewopt.io import (
    ParseError,
    detect_format,
    dumps,
    fmt_float,
    from_edge_list,
    from_graph6,
    from_sgf,
    read_graph6_file,
    roundtrip_text,
    to_edge_list,
    to_graph6,
    to_sgf,
)
from skewopt.oriented import Orientation, orientation_from_arcs

from conftest import random_graph


@st.composite
def orientations(draw):
    n = draw(st.integers(1, 12))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = sorted(draw(st.lists(st.sampled_from(pairs), unique=True))) if pairs else []
    g = build_graph(n, chosen)
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=g.m, max_size=g.m))
    return Orientation(g, tuple(signs))


def test_graph6_matches_networkx():
    rng = random.Random(3)
    for n in [1, 2, 5, 6, 7, 12, 62, 63, 64, 100]:
        g = random_graph(rng, n, 0.3)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(g.edges)
        expected = nx.to_graph6_bytes(G, header=False).decode().strip()
        assert to_graph6(g) == expected
        assert from_graph6(expected) == g


def test_graph6_known_strings():
    assert to_graph6(complete_graph(6)) == "E~~w"
    assert to_graph6(paper_matrix("G4").graph) == "G~K}]["
    assert from_graph6(">>graph6<<E~~w") == complete_graph(6)
    assert to_graph6(empty_graph(1)) == "@"


def test_graph6_k6_roundtrip_bytes():
    text = "E~~w\n"
    assert roundtrip_text(text, "graph6") == text


@pytest.mark.parametrize("text, msg", [
    ("", "empty"),
    ("E~~", "body has"),
    ("E~~x", "padding"),
    ("E~ ~w", "invalid graph6 character"),
])
def test_graph6_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        from_graph6(text)


def test_graph6_multi_line_reports_line():
    with pytest.raises(ParseError) as exc:
        read_graph6_file("E~~w\nE~~x\n")
    assert exc.value.line == 2


@given(orientations())
@settings(max_examples=150, deadline=None)
def test_sgf_roundtrip(o):
    text = to_sgf(o, 3)
    back, k = from_sgf(text)
    assert back == o and k == 3
    assert to_sgf(back, k) == text


@given(orientations())
@settings(max_examples=100, deadline=None)
def test_edge_list_and_graph6_roundtrip(o):
    g = o.graph
    assert from_edge_list(to_edge_list(g)) == g
    assert from_graph6(to_graph6(g)) == g


def test_sgf_layout():
    o = orientation_from_arcs(3, [(0, 1), (2, 1)])
    assert to_sgf(o, 1) == "3 2 1\n1 2 +1\n2 3 -1\n"


def test_sgf_accepts_reversed_pairs_and_normalizes():
    o, k = from_sgf("3 2 1\n2 1 -1\n3 2 +1\n")
    assert o.arcs() == [(0, 1), (2, 1)]
    assert roundtrip_text("3 2 1\n2 1 -1\n3 2 1\n", "sgf") == "3 2 1\n1 2 +1\n2 3 -1\n"


def test_g31_sgf_roundtrip_bytes():
    text = to_sgf(paper_matrix("G31"), 5)
    assert roundtrip_text(text, "sgf") == text


@pytest.mark.parametrize("text, msg, line, column", [
    ("2 1 1\n1 2 0\n", "sign must be", 2, 5),
    ("2 1 1\n1 3 +1\n", "outside", 2, 3),
    ("2 1 1\n1 1 +1\n", "self-loop", 2, 3),
    ("3 2 1\n1 2 +1\n2 1 -1\n", "twice", 3, 1),
    ("3 2 1\n1 2 +1\n", "declares 2 edges", 1, 3),
    ("3 1\n1 2 +1\n", "expected 3 fields", 1, 1),
    ("2 1 1\n1 x +1\n", "not an integer", 2, 3),
])
def test_sgf_diagnostics(text, msg, line, column):
    with pytest.raises(ParseError, match=msg) as exc:
        from_sgf(text)
    assert (exc.value.line, exc.value.column) == (line, column)


def test_edge_list_layout_and_errors():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert to_edge_list(g) == "3 2\n1 2\n2 3\n"
    with pytest.raises(ParseError):
        from_edge_list("3 2\n1 2\n")


def test_detect_format():
    assert detect_format("a.g6") == "graph6"
    assert detect_format("a.edges") == "edges"
    assert detect_format("a.sgf") == "sgf"
    with pytest.raises(ValueError):
        detect_format("a.xyz")


def test_json_helpers():
    assert fmt_float(17.888543819998318) == 17.88854382
    assert fmt_float(0.0) == 0.0
    assert dumps({"b": 1, "a": 2}).splitlines()[1].strip() == '"a": 2,'
