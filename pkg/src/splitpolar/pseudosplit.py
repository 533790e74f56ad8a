"""Polarity of pseudo-split graphs from the counts ``c``, ``i``, ``M_C`` and ``M_I``.

For an imperfect pseudo-split graph ``(C, S, I)`` (``S`` a 5-cycle) every
polar partition restricts to ``S`` either as (one edge | the remaining P3)
or as (a non-edge | the rest), and the side the cycle lands on forces where
``C`` and ``I`` go.  That reduces all decisions to a few integer comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, GraphError, complement, h_split_graph, mask_of, vertices_of
from .oracle import UNBOUNDED, PolarPartition, PolarityParams, as_params
from .recognition import (HSplitPartition, decide_split_polarity, recognize_pseudo_split,
                          require_imperfect_pseudo_split, split_witness)


@dataclass(frozen=True)
class PseudoSplitProfile:
    c: int
    i: int
    M_C: int
    M_I: int
    partition: HSplitPartition


@lru_cache(maxsize=4096)
def ps_profile(g: Graph) -> PseudoSplitProfile:
    part = require_imperfect_pseudo_split(g)
    c, i = part.c, part.i
    degs = g.degrees()
    m_c = sum(1 for d in degs if d == c + 4)
    m_i = sum(1 for d in degs if d == c)
    C = mask_of(part.C)
    I = mask_of(part.I)
    by_adj_c = sum(1 for v in part.C if not g.rows[v] & I)
    by_adj_i = sum(1 for v in part.I if g.rows[v] & C == C)
    if (m_c, m_i) != (by_adj_c, by_adj_i):
        raise AssertionError("degree counts disagree with adjacency")
    return PseudoSplitProfile(c, i, m_c, m_i, part)


def _check_params(p) -> PolarityParams:
    p = as_params(p)
    if p.s == 0 and p.k == 0:
        raise GraphError("(0,0) is excluded: s + k must be at least 1")
    return p


def _cond1(prof: PseudoSplitProfile, p: PolarityParams) -> bool:
    # cycle contributes an edge to B and a P3 to A
    return p.k >= prof.i + 1 and p.s >= prof.c - prof.M_C + 2


def _cond2(prof: PseudoSplitProfile, p: PolarityParams) -> bool:
    # cycle contributes a non-edge to A and an edge plus a vertex to B
    return p.s >= prof.c + 1 and p.k >= prof.i - prof.M_I + 2


def _decide_imperfect(g: Graph, prof: PseudoSplitProfile, p: PolarityParams) -> bool:
    s, k = p.s, p.k
    c = prof.c
    if s == UNBOUNDED and k == UNBOUNDED:
        return True
    if k == UNBOUNDED:
        return s > c or (c >= s >= 2 and prof.M_C >= c - s + 2)
    if s == UNBOUNDED:
        co = complement(g)
        return _decide_imperfect(co, ps_profile(co), p.swapped())
    return _cond1(prof, p) or _cond2(prof, p)


def ps_decide(g: Graph, p) -> bool:
    p = _check_params(p)
    res = recognize_pseudo_split(g)
    if res.kind == "none":
        raise GraphError("graph is not pseudo-split")
    if res.kind == "split":
        return decide_split_polarity(g, p)
    return _decide_imperfect(g, ps_profile(g), p)


def _cycle_order(g: Graph, S: frozenset[int]) -> list[int]:
    verts = sorted(S)
    order = [verts[0]]
    smask = mask_of(S)
    while len(order) < 5:
        nxt = [u for u in vertices_of(g.rows[order[-1]] & smask) if u not in order]
        order.append(min(nxt))
    return order


def _polar(g: Graph, a_mask: int, b_mask: int) -> PolarPartition:
    parts = complement(g).components(a_mask)
    cliques = g.components(b_mask)
    key = lambda m: m & -m
    return PolarPartition(tuple(frozenset(vertices_of(m)) for m in sorted(parts, key=key)),
                          tuple(frozenset(vertices_of(m)) for m in sorted(cliques, key=key)))


def ps_witness(g: Graph, p) -> PolarPartition | None:
    """Polar partition built as in the constructive half of the characterization."""
    p = _check_params(p)
    if not ps_decide(g, p):
        return None
    res = recognize_pseudo_split(g)
    if res.kind == "split":
        return split_witness(g, p)
    prof = ps_profile(g)
    part = prof.partition
    cyc = _cycle_order(g, part.S)
    C, I = mask_of(part.C), mask_of(part.I)
    if _cond1(prof, p):
        b1 = mask_of(cyc[:2])
        c_prime = mask_of(v for v in part.C if not g.rows[v] & I)
        a = (mask_of(cyc[2:])) | (C & ~c_prime)
        b = b1 | c_prime | I
    else:
        a1 = mask_of((cyc[0], cyc[2]))
        i_prime = mask_of(v for v in part.I if g.rows[v] & C == C)
        a = C | a1 | i_prime
        b = (mask_of(cyc) & ~a1) | (I & ~i_prime)
    w = _polar(g, a, b)
    w.validate(g, p)
    return w


def ps_monopolar_unipolar(g: Graph) -> tuple[bool, bool]:
    res = recognize_pseudo_split(g)
    if res.kind == "none":
        raise GraphError("graph is not pseudo-split")
    if res.kind == "split":
        return True, True
    return res.partition.c == 0, False


def _identity_pairs(n: int) -> list[tuple[int, int]]:
    return [(j, j) for j in range(n)]


def ps_catalog(name: str, s: int | None = None, k: int | None = None) -> Graph:
    """Named imperfect pseudo-split graphs.

    ``G_s0`` (``s >= 1``): ``|C| = s``, one I-vertex adjacent to all of C.
    ``G_s1``: the same minus the edge from the I-vertex to the last C-vertex.
    ``H_sk`` (``k >= s >= 1``): ``|C| = s-1``, ``|I| = k-1``, C-vertex j
    adjacent to I-vertex j only.  ``F_s`` (``s >= 2``): ``|C| = s``,
    ``|I| = s-1``, I-vertex j adjacent to C-vertex j only.
    ``K1_join_C5``: one C-vertex, no I.
    """
    if name in ("G_s0", "G_s1"):
        if s is None or s < 1:
            raise GraphError(f"{name} needs s >= 1")
        edges = [(j, 0) for j in range(s)]
        if name == "G_s1":
            edges = edges[:-1]
        return h_split_graph("C5", s, 1, edges)
    if name == "H_sk":
        if s is None or k is None or not k >= s >= 1:
            raise GraphError("H_sk needs k >= s >= 1")
        return h_split_graph("C5", s - 1, k - 1, _identity_pairs(s - 1))
    if name == "F_s":
        if s is None or s < 2:
            raise GraphError("F_s needs s >= 2")
        return h_split_graph("C5", s, s - 1, _identity_pairs(s - 1))
    if name == "K1_join_C5":
        return h_split_graph("C5", 1, 0)
    raise GraphError(f"unknown pseudo-split catalog name {name!r}")


@dataclass(frozen=True)
class PsMinimalityAnalysis:
    C_v: dict[int, frozenset[int]]
    C_prime_v: dict[int, frozenset[int]]
    minimal: bool


def ps_minimality_analysis(g: Graph, p) -> PsMinimalityAnalysis:
    """Minimality test for ``|C| = s`` and ``0 < |I| < k - 1`` via the sets ``C_v`` and ``C'_v``."""
    p = as_params(p)
    prof = ps_profile(g)
    if p.s == UNBOUNDED or p.k == UNBOUNDED or p.s < 1 or p.k < 1:
        raise GraphError("s and k must be finite and positive")
    if prof.c != p.s or not 0 < prof.i < p.k - 1:
        raise GraphError("needs |C| = s and 0 < |I| < k - 1")
    part = prof.partition
    c_v, c_prime_v = {}, {}
    for v in sorted(part.I):
        others = mask_of(part.I) & ~(1 << v)
        c_v[v] = frozenset(w for w in part.C if not g.rows[w] >> v & 1)
        c_prime_v[v] = frozenset(w for w in part.C if not g.rows[w] & others)
    ok = all(len(c_prime_v[v]) >= 2 and len(c_v[v] & c_prime_v[v]) <= 1 for v in c_v)
    return PsMinimalityAnalysis(c_v, c_prime_v, ok)
