"""Degree-sequence recognition of split, H-split and pseudo-split graphs.

Each recognizer reads a candidate partition off the sorted degree sequence,
then checks it against the adjacency rows before returning it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graph import (Graph, GraphError, H_GRAPHS, DegreeSequence, build_named, complement,
                    contains_induced, degree_sequence, mask_of, vertices_of)
from .oracle import Count, PolarPartition, as_params


class RecognitionError(AssertionError):
    """A partition read from the degree sequence failed adjacency validation."""


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]
    p: int
    omega: int
    alpha: int


@dataclass(frozen=True)
class HSplitPartition:
    C: frozenset[int]
    S: frozenset[int]
    I: frozenset[int]
    q: int
    h: int
    H: str
    strict: bool

    @property
    def c(self) -> int:
        return len(self.C)

    @property
    def i(self) -> int:
        return len(self.I)


def _split_index(degs: tuple[int, ...]) -> int:
    p = 0
    for j, d in enumerate(degs, start=1):
        if d >= j - 1:
            p = j
    return p


def recognize_split(g: Graph) -> Optional[SplitPartition]:
    return _recognize_split(g, degree_sequence(g))


def _recognize_split(g: Graph, seq: DegreeSequence) -> Optional[SplitPartition]:
    degs = seq.degrees
    n = g.n
    p = _split_index(degs)
    if sum(degs[:p]) != p * (p - 1) + sum(degs[p:]):
        return None
    clique = mask_of(seq.order[:p])
    indep = mask_of(seq.order[p:])
    if not (g.is_clique(clique) and g.is_independent(indep)):
        raise RecognitionError("split partition from degrees failed validation")
    d_p = degs[p - 1] if p else 0
    return SplitPartition(frozenset(seq.order[:p]), frozenset(seq.order[p:]), p,
                          omega=p, alpha=n - min(p, d_p))


_H_DEGREES = {"2K2": (1, 1, 1, 1), "C4": (2, 2, 2, 2), "C5": (2, 2, 2, 2, 2)}


def _check_h_partition(g: Graph, C: int, S: int, I: int, h: str) -> bool:
    if not (g.is_clique(C) and g.is_independent(I)):
        return False
    if not g.completely_adjacent(C, S) or not g.completely_nonadjacent(I, S):
        return False
    # 1-regular on 4 vertices is 2K2, 2-regular on 4 is C4, 2-regular on 5 is C5
    want = _H_DEGREES[h][0]
    return all((g.rows[v] & S).bit_count() == want for v in vertices_of(S))


def recognize_h_split(g: Graph, h: str) -> Optional[HSplitPartition]:
    """H-partition ``(C, S, I)`` for ``h`` in ``{"2K2", "C4", "C5"}``, or ``None``.

    A split graph is reported with ``S`` empty and ``strict=False``.
    """
    if h not in H_GRAPHS:
        raise GraphError(f"H must be one of {H_GRAPHS}")
    return _recognize_h_split(g, h)


@lru_cache(maxsize=4096)
def _recognize_h_split(g: Graph, h: str) -> Optional[HSplitPartition]:
    seq = degree_sequence(g)
    sp = _recognize_split(g, seq)
    hn = len(_H_DEGREES[h])
    if sp is not None:
        return HSplitPartition(sp.clique, frozenset(), sp.independent, sp.p, hn, h, False)
    degs = seq.degrees
    if g.n < hn:
        return None
    q = 0
    for j, d in enumerate(degs, start=1):
        if d >= j - 1 + hn:
            q = j
    if q + hn > g.n:
        return None
    if sum(degs[:q]) != q * (q - 1) + q * hn + sum(degs[q + hn:]):
        return None
    if any(degs[q + j] != q + dstar for j, dstar in enumerate(_H_DEGREES[h])):
        return None
    C = mask_of(seq.order[:q])
    S = mask_of(seq.order[q:q + hn])
    I = mask_of(seq.order[q + hn:])
    if not _check_h_partition(g, C, S, I, h):
        raise RecognitionError(f"{h}-partition from degrees failed validation")
    return HSplitPartition(frozenset(seq.order[:q]), frozenset(seq.order[q:q + hn]),
                           frozenset(seq.order[q + hn:]), q, hn, h, True)


def recognize_c4_split(g: Graph) -> Optional[HSplitPartition]:
    return recognize_h_split(g, "C4")


def recognize_2k2_split(g: Graph) -> Optional[HSplitPartition]:
    return recognize_h_split(g, "2K2")


@dataclass(frozen=True)
class PseudoSplitResult:
    kind: str  # "split", "imperfect" or "none"
    partition: Optional[HSplitPartition] = None
    split: Optional[SplitPartition] = None
    omega: Optional[int] = None
    chi: Optional[int] = None
    alpha: Optional[int] = None
    theta: Optional[int] = None

    @property
    def is_pseudo_split(self) -> bool:
        return self.kind != "none"


@lru_cache(maxsize=4096)
def recognize_pseudo_split(g: Graph) -> PseudoSplitResult:
    sp = recognize_split(g)
    if sp is not None:
        part = HSplitPartition(sp.clique, frozenset(), sp.independent, sp.p, 5, "C5", False)
        return PseudoSplitResult("split", part, sp, omega=sp.p, chi=sp.p,
                                 alpha=sp.alpha, theta=sp.alpha)
    part = recognize_h_split(g, "C5")
    if part is None:
        return PseudoSplitResult("none")
    q = part.q
    return PseudoSplitResult("imperfect", part, None, omega=q + 2, chi=q + 3,
                             alpha=g.n - q - 3, theta=g.n - q - 2)


def require_imperfect_pseudo_split(g: Graph) -> HSplitPartition:
    res = recognize_pseudo_split(g)
    if res.kind != "imperfect":
        raise GraphError("graph is not an imperfect pseudo-split graph")
    return res.partition


def require_strict(g: Graph, h: str) -> HSplitPartition:
    part = recognize_h_split(g, h)
    if part is None or not part.strict:
        raise GraphError(f"graph is not a strict {h}-split graph")
    return part


TWOK2_OBSTRUCTIONS = ("C4", "C5", "K2+P3", "K2+K3", "P5", "co-banner", "3K2")


@dataclass(frozen=True)
class ObstructionCheck:
    member: bool
    witness_name: Optional[str] = None
    witness: Optional[frozenset[int]] = None

    def __bool__(self) -> bool:
        return self.member


def recognize_2k2_split_by_obstructions(g: Graph) -> ObstructionCheck:
    if g.n > 20:
        raise GraphError("forbidden-subgraph recognition supports n <= 20")
    for name in TWOK2_OBSTRUCTIONS:
        w = contains_induced(g, build_named(name))
        if w is not None:
            return ObstructionCheck(False, name, w)
    return ObstructionCheck(True)


@dataclass(frozen=True)
class KClusterAnalysis:
    S_prime: frozenset[int]
    component_count: int
    is_k_cluster: bool


def analyze_k_cluster_split(g: Graph, k: Count) -> KClusterAnalysis:
    sp = recognize_split(g)
    if sp is None:
        raise GraphError("k-cluster analysis needs a split graph")
    k = as_params((0, k)).k
    K = mask_of(sp.clique)
    isolated = frozenset(w for w in sp.independent if not g.rows[w] & K)
    attached = [w for w in sp.independent if g.rows[w] & K]
    ok = all(g.rows[w] & K == K for w in attached) and len(attached) <= 1
    count = len(isolated) + (1 if K else 0)
    limit = k - 1 if K else k
    return KClusterAnalysis(isolated, count, ok and len(isolated) <= limit)


def recognize_k_cluster_split(g: Graph, k: Count) -> bool:
    return analyze_k_cluster_split(g, k).is_k_cluster


def decide_split_polarity(g: Graph, p) -> bool:
    """``(s,k)``-polarity of a split graph."""
    p = as_params(p)
    if recognize_split(g) is None:
        raise GraphError("graph is not split")
    if p.s >= 1 and p.k >= 1:
        return True
    if p.s == 0 and p.k == 0:
        return g.n == 0
    if p.s == 0:
        return recognize_k_cluster_split(g, p.k)
    return recognize_k_cluster_split(complement(g), p.s)


def split_witness(g: Graph, p):
    """Polar partition of a split graph realizing ``decide_split_polarity``."""
    p = as_params(p)
    if not decide_split_polarity(g, p):
        return None
    if p.s >= 1 and p.k >= 1:
        sp = recognize_split(g)
        a = (frozenset(sp.independent),) if sp.independent else ()
        b = (frozenset(sp.clique),) if sp.clique else ()
        return PolarPartition(a, b)
    if p.s == 0:
        return PolarPartition((), tuple(frozenset(vertices_of(c)) for c in g.components()))
    co = complement(g)
    return PolarPartition(tuple(frozenset(vertices_of(c)) for c in co.components()), ())

