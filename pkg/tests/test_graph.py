import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, to_nx
from splitpolar.graph import (CANON_MAX_ORDER, Graph, Graph6Error, GraphError, build_named,
                              canonical_code, complement, complete_graph, contains_induced,
                              cycle_graph, degree_sequence, delete_vertex, disjoint_union,
                              empty_graph, from_graph6, graph6_codec, h_split_graph,
                              induced_subgraph, is_isomorphic, join, path_graph, to_graph6)
from splitpolar.pseudosplit import ps_catalog
from splitpolar.twok2 import twok2_catalog


def degs(g):
    return degree_sequence(g).degrees


def test_named_graphs():
    c5 = build_named("C", 5)
    assert c5.n == 5 and set(c5.degrees()) == {2}
    m = build_named("3K2")
    assert m.n == 6 and m.edge_count() == 3 and set(m.degrees()) == {1}
    # co-banner: triangle with a pendant path
    assert degs(build_named("co-banner")) == (3, 2, 2, 2, 1)
    assert is_isomorphic(build_named("co-banner"),
                         complement(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])))
    with pytest.raises(GraphError):
        build_named("Petersen")


def test_operations():
    k1 = complete_graph(1)
    c5 = cycle_graph(5)
    assert degs(join(k1, c5)) == (5, 3, 3, 3, 3, 3)
    g = path_graph(4)
    assert disjoint_union(g, empty_graph(0)) == g
    assert is_isomorphic(join(complete_graph(2), build_named("2K2")), twok2_catalog("K2_join_2K2"))
    assert is_isomorphic(complement(c5), c5)
    assert is_isomorphic(complement(build_named("2K2")), build_named("C4"))
    assert induced_subgraph(g, range(4)) == g
    for v in range(5):
        assert is_isomorphic(delete_vertex(c5, v), path_graph(4))
    wheel = join(k1, c5)
    assert is_isomorphic(induced_subgraph(wheel, [1, 2, 3, 4, 5]), c5)


def test_degree_sequences():
    assert degs(complete_graph(3)) == (2, 2, 2)
    assert degs(ps_catalog("G_s0", s=2)) == (7, 7, 4, 4, 4, 4, 4, 2)
    left, right = twok2_catalog("twin_left"), twok2_catalog("twin_right")
    assert degs(left) == degs(right) == (10, 10, 9, 9, 5, 5, 5, 5, 3, 3, 2, 2)
    assert degree_sequence(left).d(1) == 10


def test_contains_induced():
    assert contains_induced(cycle_graph(5), build_named("2K2")) is None
    assert contains_induced(cycle_graph(5), build_named("P4")) is not None
    w = contains_induced(build_named("P", 5), build_named("2K2"))
    assert w == frozenset({0, 1, 3, 4})


def test_canonical_codes():
    assert canonical_code(cycle_graph(5)) == canonical_code(complement(cycle_graph(5)))
    assert canonical_code(build_named("P3")) != canonical_code(complete_graph(3))
    assert canonical_code(twok2_catalog("twin_left")) != canonical_code(twok2_catalog("twin_right"))
    with pytest.raises(GraphError):
        canonical_code(empty_graph(CANON_MAX_ORDER + 1))


def test_graph6_examples():
    assert to_graph6(complete_graph(1)) == "@"
    assert to_graph6(path_graph(3)) == "Bg"
    assert to_graph6(empty_graph(0)) == "?"
    assert from_graph6(">>graph6<<Bg") == path_graph(3)
    assert graph6_codec("encode", path_graph(3)) == "Bg"
    assert graph6_codec("decode", "Bg") == path_graph(3)
    for bad in ("???", "B", "Bgg", "~??", "B\x7f", " "):
        with pytest.raises(Graph6Error):
            from_graph6(bad)


def test_h_split_layout():
    g = h_split_graph("2K2", 2, 1, [(0, 0)])
    assert g.n == 7
    assert g.is_clique(0b11) and g.adjacent(0, 6) and not g.adjacent(1, 6)
    with pytest.raises(GraphError):
        h_split_graph("2K2", 1, 1, [(1, 0)])


@given(graphs(max_n=12))
def test_graph6_roundtrip_and_networkx(g):
    text = to_graph6(g)
    assert from_graph6(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_code_is_relabeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_code(g.relabel(perm)) == canonical_code(g)


@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_code_matches_networkx_isomorphism(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_code(g) == canonical_code(h)) == same


@given(graphs(max_n=10))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count() + complement(g).edge_count() == g.n * (g.n - 1) // 2


def test_canonical_code_random_pairs_larger_orders():
    rnd = random.Random(7)
    for _ in range(30):
        n = rnd.randint(10, 14)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.4])
        perm = list(range(n))
        rnd.shuffle(perm)
        assert canonical_code(g) == canonical_code(g.relabel(perm))
