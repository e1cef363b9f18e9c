"""Loading, normalization, and induced-subgraph queries."""

import gzip
import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import pmeanpeel as pp
from pmeanpeel.errors import EdgeListParseError

from conftest import triangle


def load_text(text: str) -> pp.Graph:
    return pp.load_edge_list(io.StringIO(text))


def test_triangle_load():
    g = load_text("0 1\n1 2\n2 0\n")
    assert g.node_count == 3
    assert g.edge_count == 3
    assert list(g.degrees) == [2, 2, 2]


def test_self_loops_dropped_duplicates_collapsed():
    g = load_text("5 5\n5 7\n7 5\n")
    assert g.node_count == 2
    assert g.edge_count == 1
    assert g.original_ids == ("5", "7")


def test_comments_and_blank_lines_skipped():
    g = load_text("# header\n% another\n\n0 1\n\n1 2\n")
    assert (g.node_count, g.edge_count) == (3, 2)


def test_malformed_line_names_line_number():
    with pytest.raises(EdgeListParseError) as exc:
        load_text("0 1\n1 2 3\n")
    assert exc.value.line_number == 2
    assert "line 2" in str(exc.value)

    with pytest.raises(EdgeListParseError):
        load_text("0 1\nlonely\n")


def test_empty_input_is_empty_graph():
    g = load_text("")
    assert g.node_count == 0
    assert g.edge_count == 0


def test_gzip_path(tmp_path):
    path = tmp_path / "g.txt.gz"
    with gzip.open(path, "wt") as fh:
        fh.write("a b\nb c\n")
    g = pp.load_edge_list(path)
    assert (g.node_count, g.edge_count) == (3, 2)
    assert g.original_ids == ("a", "b", "c")


def test_first_appearance_defines_index():
    g = load_text("9 4\n4 2\n")
    assert g.original_ids == ("9", "4", "2")
    assert list(g.neighbors(1)) == [0, 2]


def test_induced_degree_examples():
    g = triangle()
    full = np.ones(3, dtype=bool)
    assert g.induced_degree(full, 0) == 2
    assert g.induced_degree({0, 1}, 0) == 1
    assert g.induced_degree({1, 2}, 0) == 0
    with pytest.raises(IndexError):
        g.induced_degree(full, 3)


def test_induced_edge_count_examples():
    g = triangle()
    assert g.induced_edge_count(np.ones(3, dtype=bool)) == 3
    assert g.induced_edge_count({0, 1}) == 1
    assert g.induced_edge_count(set()) == 0


def test_full_set_queries_match_static_fields():
    rng = np.random.default_rng(5)
    for _ in range(20):
        g = pp.erdos_renyi(int(rng.integers(2, 30)), float(rng.uniform(0, 1)), seed=rng)
        full = np.ones(g.node_count, dtype=bool)
        for v in range(g.node_count):
            assert g.induced_degree(full, v) == g.degrees[v]
        assert g.induced_edge_count(full) == g.edge_count


def test_adjacency_sorted_and_symmetric():
    g = pp.erdos_renyi(25, 0.3, seed=11)
    for v in range(g.node_count):
        nb = g.neighbors(v)
        assert list(nb) == sorted(set(map(int, nb)))
        assert v not in set(map(int, nb))
        for u in nb:
            assert v in set(map(int, g.neighbors(u)))
    assert int(g.degrees.sum()) == 2 * g.edge_count


def test_canonical_text_golden():
    assert triangle().canonical_text() == "0\t1\n0\t2\n1\t2\n"


def test_isolated_node_canonical_round_trip():
    g = load_text("7 7\n")
    assert (g.node_count, g.edge_count) == (1, 0)
    assert g.canonical_text() == "7\t7\n"
    again = load_text(g.canonical_text())
    assert again == g


token = st.integers(min_value=0, max_value=12).map(str)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(token, token), max_size=40))
def test_canonical_round_trip(pairs):
    text = "".join(f"{u} {v}\n" for u, v in pairs)
    g = load_text(text)
    again = load_text(g.canonical_text())
    assert again.node_count == g.node_count
    assert again.edge_count == g.edge_count
    assert again == g


def test_from_adjacency_dense_and_sparse():
    import scipy.sparse as sp

    dense = np.array([
        [0, 1, 0, 0],
        [0, 0, 1, 0],   # asymmetric entries still mean an undirected edge
        [0, 0, 5, 0],   # diagonal ignored
        [0, 0, 0, 0],
    ])
    g = pp.Graph.from_adjacency(dense)
    assert g.node_count == 4          # isolated node 3 kept
    assert g.edge_count == 2
    assert g.induced_degree(np.ones(4, bool), 3) == 0

    g2 = pp.Graph.from_adjacency(sp.csr_matrix(dense))
    assert g2 == g

    with pytest.raises(ValueError):
        pp.Graph.from_adjacency(np.zeros((2, 3)))


def test_from_edge_array_normalizes():
    pairs = np.array([[0, 1], [1, 0], [2, 2], [1, 2]])
    g = pp.Graph.from_edge_array(pairs, n=4)
    assert g.node_count == 4
    assert g.edge_count == 2


def test_connected_component_count():
    g = pp.Graph.from_edges([(0, 1), (2, 3), (4, 4)])
    assert g.connected_component_count() == 3
