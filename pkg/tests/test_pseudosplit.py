import pytest
from hypothesis import given, strategies as st

from conftest import h_split_patterns
from splitpolar.graph import (GraphError, build_named, complete_graph, cycle_graph, disjoint_union,
                              empty_graph, h_split_graph, join)
from splitpolar.oracle import UNBOUNDED, PolarityParams, oracle_is_polar, oracle_minimal_obstruction
from splitpolar.pseudosplit import (ps_catalog, ps_decide, ps_minimality_analysis,
                                    ps_monopolar_unipolar, ps_profile, ps_witness)
from splitpolar.verify import polarity_sweep

counts = st.one_of(st.integers(0, 5), st.just(UNBOUNDED))


def profile(g):
    p = ps_profile(g)
    return p.c, p.i, p.M_C, p.M_I


def test_profiles():
    assert profile(cycle_graph(5)) == (0, 0, 0, 0)
    assert profile(ps_catalog("G_s0", s=2)) == (2, 1, 0, 1)
    assert profile(ps_catalog("G_s1", s=2)) == (2, 1, 1, 0)


def test_decide_examples():
    g = ps_catalog("G_s0", s=2)
    assert not ps_decide(g, (2, 2)) and ps_decide(g, (3, 2))
    assert ps_decide(cycle_graph(5), (1, 2)) and not ps_decide(cycle_graph(5), (1, 1))
    f3 = ps_catalog("F_s", s=3)
    assert not any(ps_decide(f3, (3, k)) for k in list(range(8)) + [UNBOUNDED])
    with pytest.raises(GraphError):
        ps_decide(build_named("2K2"), (1, 1))
    with pytest.raises(GraphError):
        ps_decide(cycle_graph(5), (0, 0))


def test_witness_examples():
    c5 = cycle_graph(5)
    w = ps_witness(c5, (2, 1))
    assert len(w.A) == 3 and len(w.B_cliques) == 1 and len(w.B) == 2
    g = ps_catalog("G_s0", s=2)
    w = ps_witness(g, (3, 2))
    w.validate(g, PolarityParams(3, 2))
    assert ps_profile(g).partition.C <= w.A
    k4 = complete_graph(4)
    assert ps_witness(k4, (1, 1)).B == frozenset(range(4))
    assert ps_witness(g, (2, 2)) is None


def test_monopolar_unipolar():
    assert ps_monopolar_unipolar(cycle_graph(5)) == (True, False)
    # a pseudo-split graph is unipolar only when split, so K1 join C5 is neither
    assert ps_monopolar_unipolar(join(complete_graph(1), cycle_graph(5))) == (False, False)
    assert ps_monopolar_unipolar(disjoint_union(empty_graph(3), cycle_graph(5)))[0]
    assert ps_monopolar_unipolar(complete_graph(3)) == (True, True)


def test_catalog_members():
    f3 = ps_catalog("F_s", s=3)
    assert f3.n == 10 and oracle_minimal_obstruction(f3, (3, UNBOUNDED))
    assert oracle_minimal_obstruction(ps_catalog("G_s0", s=2), (2, 2))
    h22 = ps_catalog("H_sk", s=2, k=2)
    assert h22.n == 7 and not oracle_minimal_obstruction(h22, (2, 2))
    h33 = ps_catalog("H_sk", s=3, k=3)
    assert h33.n == 9 and oracle_minimal_obstruction(h33, (3, 3))
    assert ps_catalog("K1_join_C5").n == 6
    for bad in (("G_s0", 0, None), ("H_sk", 3, 2), ("F_s", 1, None), ("nope", 1, 1)):
        with pytest.raises(GraphError):
            ps_catalog(*bad)


def test_minimality_analysis():
    f3 = ps_catalog("F_s", s=3)
    assert ps_minimality_analysis(f3, (3, 5)).minimal
    # two C-vertices missing I: polar by the edge-to-B construction, so not an obstruction
    g = h_split_graph("C5", 3, 1, [(0, 0)])
    assert not ps_minimality_analysis(g, (3, 4)).minimal
    assert not oracle_minimal_obstruction(g, (3, 4))
    with pytest.raises(GraphError):
        ps_minimality_analysis(ps_catalog("G_s0", s=3), (3, 2))


def test_sweep_small():
    res = polarity_sweep("pseudo-split", max_c=2, max_i=2)
    assert res.ok, res.mismatches


@given(h_split_patterns("C5", 3, 3), counts, counts)
def test_decide_matches_oracle(g, s, k):
    if (s, k) == (0, 0):
        return
    assert ps_decide(g, (s, k)) == oracle_is_polar(g, (s, k))


@given(h_split_patterns("C5", 3, 3), counts, counts)
def test_witness_is_valid(g, s, k):
    if (s, k) == (0, 0):
        return
    w = ps_witness(g, (s, k))
    assert (w is not None) == ps_decide(g, (s, k))
    if w is not None:
        w.validate(g, PolarityParams(s, k))


@given(h_split_patterns("C5", 3, 3))
def test_minimality_analysis_matches_oracle(g):
    prof = ps_profile(g)
    s, k = prof.c, prof.i + 2
    if s < 1 or prof.i < 1:
        return
    assert ps_minimality_analysis(g, (s, k)).minimal == bool(oracle_minimal_obstruction(g, (s, k)))
