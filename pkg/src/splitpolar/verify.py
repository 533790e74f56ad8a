"""Exhaustive agreement sweeps between the fast deciders and the oracle.

Each sweep returns a ``SweepResult`` with the number of comparisons and
the first few mismatches, so callers can assert on ``mismatches == []``
and still see what went wrong when they are not.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import bicolor_obstruction_family, ps_coloring_profile
from .graph import Graph, build_named, complement, contains_induced, to_graph6
from .oracle import (UNBOUNDED, oracle_bichromatic, oracle_chromatic, oracle_clique_cover,
                     oracle_cochromatic, oracle_minimal_bicolor_obstruction, polar_profile)
from .recognition import (TWOK2_OBSTRUCTIONS, recognize_2k2_split_by_obstructions, recognize_h_split,
                          recognize_pseudo_split, recognize_split)
from .search import CLASS_H, all_graphs, canonical_pattern, graph_from_columns, labeled_family, pattern_orbits

GRID = tuple(list(range(6)) + [UNBOUNDED])
PARAMS = tuple((s, k) for s in GRID for k in GRID if (s, k) != (0, 0))
MAX_REPORTED = 10


@dataclass
class SweepResult:
    checks: int = 0
    graphs: int = 0
    failures: int = 0
    mismatches: list = field(default_factory=list)

    def miss(self, item) -> None:
        if len(self.mismatches) < MAX_REPORTED:
            self.mismatches.append(item)
        self.failures += 1

    @property
    def ok(self) -> bool:
        return self.failures == 0


def labeled_graphs(n: int):
    """Every labeled graph on ``n`` vertices (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for j, (u, v) in enumerate(pairs):
            if bits >> j & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))


_SPLIT_FORBIDDEN = tuple(build_named(x) for x in ("2K2", "C4", "C5"))
_TWOK2_FORBIDDEN = tuple(build_named(x) for x in TWOK2_OBSTRUCTIONS)


def _free_of(g: Graph, family) -> bool:
    return all(contains_induced(g, h) is None for h in family)


def _recognition_compare(g: Graph, res: SweepResult) -> None:
    split_fs = _free_of(g, _SPLIT_FORBIDDEN)
    ps_fs = split_fs or _free_of(g, _SPLIT_FORBIDDEN[:2])
    verdicts = {
        "split": (recognize_split(g) is not None, split_fs),
        "pseudo-split": (recognize_pseudo_split(g).is_pseudo_split, ps_fs),
        "2K2-split": (recognize_h_split(g, "2K2") is not None, _free_of(g, _TWOK2_FORBIDDEN)),
        "2K2-by-obstructions": (recognize_2k2_split_by_obstructions(g).member,
                                recognize_h_split(g, "2K2") is not None),
        "C4-split": (recognize_h_split(g, "C4") is not None,
                     _free_of(complement(g), _TWOK2_FORBIDDEN)),
    }
    res.graphs += 1
    for name, (fast, slow) in verdicts.items():
        res.checks += 1
        if fast != slow:
            res.miss((name, to_graph6(g), fast, slow))


def recognition_sweep(max_labeled: int = 6, unlabeled: int | None = 7) -> SweepResult:
    """Degree-sequence recognizers against forbidden induced subgraph checks."""
    res = SweepResult()
    for n in range(max_labeled + 1):
        for g in labeled_graphs(n):
            _recognition_compare(g, res)
    if unlabeled is not None:
        for g in all_graphs(unlabeled):
            _recognition_compare(g, res)
    return res


def _oracle_verdict(table, n: int, s, k) -> bool:
    best = table[int(min(s, n))]
    return best != math.inf and best <= k


def polarity_sweep(cls: str, max_c: int = 4, max_i: int = 4, params=PARAMS) -> SweepResult:
    """Decider on every labeled C-I pattern against the oracle on its orbit representative.

    For ``2K2-split`` the C4 decider is also checked, on the complement with
    swapped parameters, against the oracle run on the complement itself.
    """
    from .pseudosplit import ps_decide
    from .twok2 import c4_decide, twok2_decide
    h = CLASS_H[cls]
    decide = ps_decide if h == "C5" else twok2_decide
    res = SweepResult()
    for c in range(max_c + 1):
        for i in range(max_i + 1):
            tables, co_tables = {}, {}
            for rep in pattern_orbits(c, i):
                g = graph_from_columns(h, c, rep)
                tables[rep] = polar_profile(g)
                if h == "2K2":
                    co_tables[rep] = polar_profile(complement(g))
            for cols, g in labeled_family(h, c, i):
                rep = canonical_pattern(c, cols)
                table = tables[rep]
                res.graphs += 1
                co = complement(g) if h == "2K2" else None
                for s, k in params:
                    res.checks += 1
                    want = _oracle_verdict(table, g.n, s, k)
                    if decide(g, (s, k)) != want:
                        res.miss((cls, to_graph6(g), (s, k), want))
                    if co is not None:
                        res.checks += 1
                        want = _oracle_verdict(co_tables[rep], g.n, k, s)
                        if c4_decide(co, (k, s)) != want:
                            res.miss(("C4-split", to_graph6(co), (k, s), want))
    return res


def coloring_sweep(max_c: int = 3, max_i: int = 3, zs=(1, 2, 3)) -> SweepResult:
    """Closed-form coloring numbers against the oracle, plus the bicolor obstruction families."""
    res = SweepResult()
    for c in range(max_c + 1):
        for i in range(max_i + 1):
            for rep in pattern_orbits(c, i):
                g = graph_from_columns("C5", c, rep)
                prof = ps_coloring_profile(g)
                want = (oracle_chromatic(g), oracle_clique_cover(g), oracle_cochromatic(g),
                        oracle_bichromatic(g))
                got = (prof.chi, prof.theta, prof.cochromatic, prof.bichromatic)
                res.graphs += 1
                res.checks += 4
                if got != want or got != (c + 3, i + 3, 3, max(c, i) + 3):
                    res.miss((to_graph6(g), got, want))
    for z in zs:
        for m in bicolor_obstruction_family(z):
            res.checks += 1
            if not oracle_minimal_bicolor_obstruction(m, z):
                res.miss(("bicolor", z, to_graph6(m)))
    return res


__all__ = ["GRID", "PARAMS", "SweepResult", "coloring_sweep", "labeled_graphs", "polarity_sweep",
           "recognition_sweep"]
