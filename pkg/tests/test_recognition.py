import pytest
from hypothesis import given

from conftest import graphs
from splitpolar.graph import (GraphError, build_named, complement, complete_graph, contains_induced,
                              cycle_graph, empty_graph, path_graph)
from splitpolar.pseudosplit import ps_catalog
from splitpolar.recognition import (TWOK2_OBSTRUCTIONS, analyze_k_cluster_split, decide_split_polarity,
                                    recognize_2k2_split, recognize_2k2_split_by_obstructions,
                                    recognize_c4_split, recognize_h_split, recognize_k_cluster_split,
                                    recognize_pseudo_split, recognize_split, split_witness)
from splitpolar.verify import labeled_graphs, recognition_sweep

SPLIT_FORBIDDEN = [build_named(x) for x in ("2K2", "C4", "C5")]


def free_of(g, names):
    return all(contains_induced(g, build_named(x)) is None for x in names)


def test_split_examples():
    sp = recognize_split(complete_graph(3))
    assert sp.p == 3 and not sp.independent and sp.omega == 3
    sp = recognize_split(path_graph(3))
    assert sp.p == 2 and 1 in sp.clique and len(sp.clique) == 2
    assert recognize_split(cycle_graph(5)) is None


def test_h_split_examples():
    part = recognize_h_split(cycle_graph(5), "C5")
    assert part.S == frozenset(range(5)) and not part.C and not part.I and part.q == 0
    assert recognize_h_split(build_named("3K2"), "2K2") is None
    part = recognize_h_split(ps_catalog("G_s0", s=2), "C5")
    assert (part.c, len(part.S), part.i, part.q) == (2, 5, 1, 2)
    with pytest.raises(GraphError):
        recognize_h_split(cycle_graph(5), "P4")


def test_pseudo_split_examples():
    res = recognize_pseudo_split(cycle_graph(5))
    assert res.kind == "imperfect" and (res.chi, res.theta, res.omega, res.alpha) == (3, 3, 2, 2)
    assert recognize_pseudo_split(build_named("2K2")).kind == "none"
    assert recognize_pseudo_split(complete_graph(4)).kind == "split"


def test_2k2_split_examples():
    chk = recognize_2k2_split_by_obstructions(build_named("P5"))
    assert not chk and chk.witness_name == "P5"
    part = recognize_2k2_split(build_named("2K2"))
    assert part.strict and part.c == part.i == 0
    assert recognize_2k2_split(build_named("K2+K3")) is None
    assert recognize_c4_split(build_named("C4")).strict


def test_k_cluster_examples():
    assert recognize_k_cluster_split(complete_graph(3), 1)
    assert not recognize_k_cluster_split(path_graph(3), 1)
    assert not recognize_k_cluster_split(path_graph(3), 5)
    assert recognize_k_cluster_split(empty_graph(3), 3)
    assert not recognize_k_cluster_split(empty_graph(3), 2)
    assert analyze_k_cluster_split(empty_graph(3), 3).component_count == 3


def test_split_polarity():
    g = path_graph(3)
    assert decide_split_polarity(g, (1, 1))
    assert not decide_split_polarity(g, (0, 5))
    assert decide_split_polarity(g, (5, 0))  # complement is K2 + K1
    w = split_witness(g, (1, 1))
    w.validate(g)
    with pytest.raises(GraphError):
        decide_split_polarity(cycle_graph(5), (1, 1))


def test_labeled_sweep_small():
    # every labeled graph up to n = 5; the full n <= 6 sweep is an acceptance criterion
    res = recognition_sweep(max_labeled=5, unlabeled=None)
    assert res.ok, res.mismatches


@given(graphs(max_n=8))
def test_split_matches_forbidden(g):
    assert (recognize_split(g) is not None) == free_of(g, ("2K2", "C4", "C5"))


@given(graphs(max_n=8))
def test_pseudo_split_matches_forbidden(g):
    res = recognize_pseudo_split(g)
    assert res.is_pseudo_split == free_of(g, ("2K2", "C4"))
    if res.kind == "imperfect":
        part = res.partition
        assert g.is_clique(sum(1 << v for v in part.C))
        assert g.is_independent(sum(1 << v for v in part.I))


@given(graphs(max_n=8))
def test_2k2_split_matches_obstructions(g):
    assert (recognize_2k2_split(g) is not None) == free_of(g, TWOK2_OBSTRUCTIONS)


@given(graphs(max_n=8))
def test_c4_split_is_complement_of_2k2_split(g):
    assert (recognize_c4_split(g) is not None) == (recognize_2k2_split(complement(g)) is not None)


def test_labeled_graph_counts():
    assert sum(1 for _ in labeled_graphs(4)) == 64
