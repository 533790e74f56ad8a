"""Polarity of 2K2-split graphs, and of C4-split graphs through complements.

Unlike the pseudo-split case, the answer is not a function of the degree
sequence alone: it depends on which I-vertices miss the *same* C-vertex.
``twok2_analysis`` collects exactly the sets the decision needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, GraphError, complement, h_split_graph, mask_of, vertices_of
from .oracle import UNBOUNDED, PolarPartition, PolarityParams, as_params
from .recognition import decide_split_polarity, recognize_h_split, require_strict, split_witness


@dataclass(frozen=True)
class TwoK2Analysis:
    c: int
    i: int
    C: frozenset[int]
    S: frozenset[int]
    I: frozenset[int]
    s_edges: tuple[tuple[int, int], tuple[int, int]]
    nonadjC: frozenset[int]        # C-vertices with no neighbour in I (degree c+3)
    fullAdjI: frozenset[int]       # I-vertices adjacent to all of C (degree c)
    I_star: frozenset[int]         # I-vertices of degree c-1
    I_star_v: dict[int, frozenset[int]]  # v in C -> I-vertices w with N(w) = C - v

    def best_I_star_v(self) -> tuple[int | None, frozenset[int]]:
        best_v, best = None, frozenset()
        for v in sorted(self.I_star_v):
            if len(self.I_star_v[v]) > len(best):
                best_v, best = v, self.I_star_v[v]
        return best_v, best


def _s_edges(g: Graph, S: frozenset[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    verts = sorted(S)
    u = verts[0]
    v = next(w for w in verts if g.adjacent(u, w))
    x, y = [w for w in verts if w not in (u, v)]
    return (u, v), (x, y)


@lru_cache(maxsize=4096)
def twok2_analysis(g: Graph) -> TwoK2Analysis:
    part = require_strict(g, "2K2")
    c, i = part.c, part.i
    C, I = mask_of(part.C), mask_of(part.I)
    degs = g.degrees()
    nonadj = frozenset(v for v in part.C if not g.rows[v] & I)
    full = frozenset(w for w in part.I if g.rows[w] & C == C)
    if nonadj != frozenset(v for v in range(g.n) if degs[v] == c + 3):
        raise AssertionError("degree c+3 vertices disagree with adjacency")
    if full != frozenset(v for v in range(g.n) if degs[v] == c):
        raise AssertionError("degree c vertices disagree with adjacency")
    star = frozenset(w for w in part.I if degs[w] == c - 1)
    star_v = {v: frozenset(w for w in part.I if g.rows[w] & C == C & ~(1 << v)) for v in sorted(part.C)}
    return TwoK2Analysis(c, i, part.C, part.S, part.I, _s_edges(g, part.S),
                         nonadj, full, star, star_v)


def _check_params(p) -> PolarityParams:
    p = as_params(p)
    if p.s == 0 and p.k == 0:
        raise GraphError("(0,0) is excluded: s + k must be at least 1")
    return p


def _branch(a: TwoK2Analysis, g: Graph, p: PolarityParams) -> tuple[str, bool]:
    """Return ``(branch label, verdict)`` for a strict 2K2-split graph."""
    s, k, c, i = p.s, p.k, a.c, a.i
    if c == 0 and i == 0:
        return "2K2", k >= 2 or (s >= 2 and k >= 1)
    if c == 0:
        return "iK1+2K2", k >= i + 2 or (s >= 1 and k >= 2)
    if i == 0:
        return "Kc+2K2", (s >= 2 and k >= 1) or (c == 1 and s >= 1 and k >= 2)
    if k == 0:
        return "k=0", False
    if s <= 1 and k <= 1:
        return "s,k<=1", False
    if s == 0:
        return "s=0", False
    if k == 1:
        return "k=1", False
    if s == 1:
        attached = sum(1 for w in a.I if g.rows[w])
        return "s=1", c == 1 and attached <= k - 2
    if s == UNBOUNDED and k == UNBOUNDED:
        return "polar", True
    if k == UNBOUNDED:
        return "k=inf", s >= c or len(a.nonadjC) >= c - s + 2
    if s == UNBOUNDED:
        need = i - k + 2
        return "s=inf", i <= k - 1 or len(a.fullAdjI) >= need or len(a.best_I_star_v()[1]) >= need
    if c <= s and i <= k - 2:
        return "case1", True
    if c <= s - 2 and i <= k - 1:
        return "case2", True
    if c >= s + 1 and i >= k:
        return "case3", False
    if c > s and i < k:
        return "case4", len(a.nonadjC) >= c - s + 2
    if c < s and i >= k:
        need = i - k + 2
        return "case5", len(a.fullAdjI) >= need or len(a.best_I_star_v()[1]) >= need
    if c == s and i >= k:
        return "case6", len(a.best_I_star_v()[1]) >= i - k + 2
    if c == s and i == k - 1:
        return "case7", len(a.nonadjC) >= 2 or bool(a.best_I_star_v()[1])
    if c == s - 1 and i == k - 1:
        return "case8", bool(a.nonadjC) or bool(a.fullAdjI) or bool(a.best_I_star_v()[1])
    raise AssertionError(f"no branch for c={c}, i={i}, {p}")


def _require_2k2(g: Graph):
    part = recognize_h_split(g, "2K2")
    if part is None:
        raise GraphError("graph is not 2K2-split")
    return part


def twok2_branch(g: Graph, p) -> str:
    """Label of the decision branch taken for ``g`` at ``p``."""
    p = _check_params(p)
    if not _require_2k2(g).strict:
        return "split"
    return _branch(twok2_analysis(g), g, p)[0]


def twok2_decide(g: Graph, p) -> bool:
    p = _check_params(p)
    if not _require_2k2(g).strict:
        return decide_split_polarity(g, p)
    return _branch(twok2_analysis(g), g, p)[1]


def _partition(g: Graph, a_mask: int) -> PolarPartition:
    b_mask = g.full_mask & ~a_mask
    key = lambda m: m & -m
    parts = sorted(complement(g).components(a_mask), key=key)
    cliques = sorted(g.components(b_mask), key=key)
    return PolarPartition(tuple(frozenset(vertices_of(m)) for m in parts),
                          tuple(frozenset(vertices_of(m)) for m in cliques))


def _witness_a_side(a: TwoK2Analysis, g: Graph, p: PolarityParams, label: str) -> int:
    """A side of the partition certifying the branch ``label``."""
    s, k, c, i = p.s, p.k, a.c, a.i
    (u, v), (x, y) = a.s_edges
    C, I = mask_of(a.C), mask_of(a.I)
    uv = mask_of((u, v))

    def cut_c() -> int:  # ({u,v} + C - C', {x,y} + C' + I)
        return uv | (C & ~mask_of(a.nonadjC))

    def with_i(extra: frozenset[int]) -> int:  # (C + I', S + I - I')
        return C | mask_of(extra)

    def big_i_set(need: int) -> frozenset[int]:
        if len(a.fullAdjI) >= need:
            return a.fullAdjI
        return a.best_I_star_v()[1]

    if label == "2K2":
        return 0 if k >= 2 else uv
    if label == "iK1+2K2":
        return 0 if k >= i + 2 else I | mask_of((u, x))
    if label == "Kc+2K2":
        return mask_of((x, y)) if s >= 2 else C
    if label == "s=1":
        return C | mask_of(w for w in a.I if not g.rows[w])
    if label == "polar":
        return C | uv
    if label == "k=inf":
        return C if s >= c else cut_c()
    if label == "s=inf":
        return C | uv if i <= k - 1 else with_i(big_i_set(i - k + 2))
    if label == "case1":
        return C
    if label == "case2":
        return C | uv
    if label == "case4":
        return cut_c()
    if label in ("case5", "case6"):
        return with_i(big_i_set(i - k + 2) if label == "case5" else a.best_I_star_v()[1])
    if label == "case7":
        return cut_c() if len(a.nonadjC) >= 2 else with_i(a.best_I_star_v()[1])
    if label == "case8":
        if a.nonadjC:
            return cut_c()
        return with_i(a.fullAdjI if a.fullAdjI else a.best_I_star_v()[1])
    raise AssertionError(f"no witness recipe for branch {label}")


def twok2_witness(g: Graph, p) -> PolarPartition | None:
    p = _check_params(p)
    if not _require_2k2(g).strict:
        return split_witness(g, p)
    a = twok2_analysis(g)
    label, ok = _branch(a, g, p)
    if not ok:
        return None
    w = _partition(g, _witness_a_side(a, g, p, label))
    w.validate(g, p)
    return w


def c4_decide(g: Graph, p) -> bool:
    p = _check_params(p)
    part = recognize_h_split(g, "C4")
    if part is None:
        raise GraphError("graph is not C4-split")
    if part.strict and p.s == 1 and p.k >= 2:
        return g.max_degree() <= 2
    return twok2_decide(complement(g), p.swapped())


def c4_witness(g: Graph, p) -> PolarPartition | None:
    p = _check_params(p)
    if recognize_h_split(g, "C4") is None:
        raise GraphError("graph is not C4-split")
    w = twok2_witness(complement(g), p.swapped())
    if w is None:
        return None
    return PolarPartition(w.B_cliques, w.A_parts)


def twok2_catalog(name: str, s: int | None = None, k: int | None = None) -> Graph:
    """Named strict 2K2-split graphs.

    Vertices: C first, then the two S-edges, then I; "C-vertex j" and
    "I-vertex j" are 0-based positions inside their parts.
    """
    def need(cond: bool, msg: str):
        if not cond:
            raise GraphError(msg)

    if name == "one_I_full":
        need(s is not None and s >= 2, "one_I_full needs s >= 2")
        return h_split_graph("2K2", s, 1, [(j, 0) for j in range(s)])
    if name == "one_I_miss2":
        need(s is not None and s >= 2, "one_I_miss2 needs s >= 2")
        return h_split_graph("2K2", s + 1, 1, [(j, 0) for j in range(2, s + 1)])
    if name == "one_I_miss1":
        need(s is not None and s >= 2, "one_I_miss1 needs s >= 2")
        return h_split_graph("2K2", s + 1, 1, [(j, 0) for j in range(1, s + 1)])
    if name == "H_s":
        need(s is not None and s >= 2, "H_s needs s >= 2")
        return h_split_graph("2K2", s + 1, s - 1, [(j, j) for j in range(s - 1)])
    if name == "K2_join_2K2":
        return h_split_graph("2K2", 2, 0)
    if name == "K1_join_2K2_plus_K":
        need(k is not None and k >= 2, "K1_join_2K2_plus_K needs k >= 2")
        return h_split_graph("2K2", 1, k - 1, [(0, j) for j in range(k - 1)])
    if name == "star_k":
        need(k is not None and k >= 2, "star_k needs k >= 2")
        return h_split_graph("2K2", 1, 2 * k - 2, [(0, j) for j in range(k - 1)])
    if name == "tight_k":
        need(k is not None and k >= 2, "tight_k needs k >= 2")
        return h_split_graph("2K2", k - 1, k, [(a, b) for a in range(k - 1) for b in range(k) if a != b])
    if name in ("twin_left", "twin_right"):
        # C = 0..3, S = 4..7, I = 8..11; the pair differs only at I-vertex 2
        nbrs = {0: (0, 3), 1: (0, 1), 2: (1, 2, 3), 3: (1, 2, 3)}
        if name == "twin_right":
            nbrs[2] = (0, 1, 2)
        return h_split_graph("2K2", 4, 4, [(a, b) for b, row in nbrs.items() for a in row])
    raise GraphError(f"unknown 2K2-split catalog name {name!r}")
