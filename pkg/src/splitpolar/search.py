"""Exhaustive families of H-split graphs and minimal polar obstructions among them.

A strict H-split graph with ``|C| = c`` and ``|I| = i`` is fixed by its
C-I bipartite pattern, stored here as ``i`` column masks (column ``b`` is
the set of C-vertices adjacent to I-vertex ``b``).  Relabeling C or I acts
on patterns by permuting bits or columns, so most searches only visit one
representative per orbit; ``labeled_family`` walks every pattern when a
sweep needs all of them.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from typing import Iterable, Iterator

from .graph import (CANON_MAX_ORDER, CanonicalCode, Graph, GraphError, canonical_code, empty_graph,
                    from_graph6, h_split_graph, to_graph6, vertices_of)
from .oracle import (POLAR_MAX_ORDER, UNIPOLAR, UNBOUNDED, PolarityParams, as_params, format_count,
                     oracle_minimal_obstruction)

CLASS_H = {"pseudo-split": "C5", "2K2-split": "2K2", "C4-split": "C4"}
MAX_PATTERN_BITS = 20


@dataclass(frozen=True)
class FamilySpec:
    cls: str
    c_range: tuple[int, int]
    i_range: tuple[int, int]

    def __post_init__(self):
        if self.cls not in CLASS_H:
            raise GraphError(f"class must be one of {sorted(CLASS_H)}")
        (c0, c1), (i0, i1) = self.c_range, self.i_range
        if c0 < 0 or i0 < 0 or c0 > c1 or i0 > i1:
            raise GraphError("ranges must be nonempty and nonnegative")
        if c1 * i1 > MAX_PATTERN_BITS:
            raise GraphError(f"c*i must stay <= {MAX_PATTERN_BITS}")

    @property
    def h(self) -> str:
        return CLASS_H[self.cls]

    def sizes(self) -> Iterator[tuple[int, int]]:
        for c in range(self.c_range[0], self.c_range[1] + 1):
            for i in range(self.i_range[0], self.i_range[1] + 1):
                yield c, i


def _permute_bits(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for a in vertices_of(mask):
        out |= 1 << perm[a]
    return out


def canonical_pattern(c: int, columns: Iterable[int]) -> tuple[int, ...]:
    """Least sorted column tuple over all relabelings of C."""
    cols = tuple(columns)
    best = None
    for perm in permutations(range(c)):
        cand = tuple(sorted(_permute_bits(m, perm) for m in cols))
        if best is None or cand < best:
            best = cand
    return best if best is not None else tuple(sorted(cols))


def pattern_orbits(c: int, i: int) -> dict[tuple[int, ...], int]:
    """Orbit representatives of C-I patterns mapped to the number of labeled patterns in each."""
    if c * i > MAX_PATTERN_BITS:
        raise GraphError(f"c*i must stay <= {MAX_PATTERN_BITS}")
    out: dict[tuple[int, ...], int] = {}
    fact_i = math.factorial(i)
    for cols in combinations_with_replacement(range(1 << c), i):
        arrangements = fact_i
        for mult in Counter(cols).values():
            arrangements //= math.factorial(mult)
        key = canonical_pattern(c, cols)
        out[key] = out.get(key, 0) + arrangements
    return out


def graph_from_columns(h: str, c: int, columns: tuple[int, ...]) -> Graph:
    edges = [(a, b) for b, col in enumerate(columns) for a in vertices_of(col)]
    return h_split_graph(h, c, len(columns), edges)


def columns_of_pattern(c: int, i: int, pattern: int) -> tuple[int, ...]:
    """Bit ``b*c + a`` of ``pattern`` is the edge between C-vertex a and I-vertex b."""
    full = (1 << c) - 1
    return tuple((pattern >> (b * c)) & full for b in range(i))


def labeled_family(h: str, c: int, i: int) -> Iterator[tuple[tuple[int, ...], Graph]]:
    """Every labeled pattern with its graph."""
    if c * i > MAX_PATTERN_BITS:
        raise GraphError(f"c*i must stay <= {MAX_PATTERN_BITS}")
    for pattern in range(1 << (c * i)):
        cols = columns_of_pattern(c, i, pattern)
        yield cols, graph_from_columns(h, c, cols)


def family_orbits(spec: FamilySpec) -> Iterator[tuple[int, int, tuple[int, ...], Graph]]:
    """One graph per pattern orbit, as ``(c, i, columns, graph)``."""
    for c, i in spec.sizes():
        for cols in sorted(pattern_orbits(c, i)):
            yield c, i, cols, graph_from_columns(spec.h, c, cols)


def enumerate_family(spec: FamilySpec) -> Iterator[Graph]:
    """Every graph of the family once up to isomorphism."""
    seen: set[CanonicalCode] = set()
    for _, _, _, g in family_orbits(spec):
        code = canonical_code(g)
        if code not in seen:
            seen.add(code)
            yield g


def all_graphs(n: int) -> list[Graph]:
    """All graphs of order ``n`` up to isomorphism, by one-vertex extension."""
    if n < 0:
        raise GraphError("order must be nonnegative")
    if n > 8:
        raise GraphError("all_graphs is meant for n <= 8")
    level = [empty_graph(0)]
    for m in range(n):
        seen: dict[CanonicalCode, Graph] = {}
        for g in level:
            for nbrs in range(1 << m):
                rows = list(g.rows) + [nbrs]
                for u in vertices_of(nbrs):
                    rows[u] |= 1 << m
                h = Graph(m + 1, tuple(rows))
                seen.setdefault(canonical_code(h), h)
        level = [seen[code] for code in sorted(seen)]
    return level


# --------------------------------------------------------------------------
# obstruction reports

def _target(p):
    return p if p == UNIPOLAR else as_params(p)


def format_target(p) -> str:
    return "unipolar" if p == UNIPOLAR else str(as_params(p))


@dataclass(frozen=True)
class ObstructionRecord:
    code: CanonicalCode
    graph6: str
    order: int
    c: int
    i: int
    params: str
    minimal: bool = True

    def line(self) -> str:
        return f"{self.code.hex()}\t{self.graph6}\t{self.order}\t{self.params}\t{'minimal' if self.minimal else 'not-minimal'}"

    @property
    def graph(self) -> Graph:
        return from_graph6(self.graph6)

    @classmethod
    def parse(cls, line: str) -> "ObstructionRecord":
        code, g6, order, params, flag = line.rstrip("\n").split("\t")
        n, bits = code.split(":")
        return cls(CanonicalCode(int(n), int(bits, 16)), g6, int(order), -1, -1, params, flag == "minimal")


@dataclass
class ObstructionReport:
    cls: str
    params: str
    records: list[ObstructionRecord] = field(default_factory=list)
    searched_sizes: tuple[tuple[int, int], ...] = ()

    @property
    def max_order_found(self) -> int:
        return max((r.order for r in self.records), default=0)

    def codes(self) -> set[CanonicalCode]:
        return {r.code for r in self.records}

    def lines(self) -> list[str]:
        return [r.line() for r in self.records]


def find_minimal_obstructions(spec: FamilySpec, p, order_cap: int = POLAR_MAX_ORDER) -> ObstructionReport:
    """Minimal obstructions (to ``(s,k)``-polarity, or to ``UNIPOLAR``) inside the family."""
    if order_cap > POLAR_MAX_ORDER:
        raise GraphError(f"order_cap above the oracle limit {POLAR_MAX_ORDER}")
    target = _target(p)
    hn = 5 if spec.h == "C5" else 4
    found: dict[CanonicalCode, ObstructionRecord] = {}
    sizes = []
    for c, i in spec.sizes():
        if c + i + hn > order_cap:
            continue
        sizes.append((c, i))
        for cols in sorted(pattern_orbits(c, i)):
            g = graph_from_columns(spec.h, c, cols)
            if oracle_minimal_obstruction(g, target):
                code = canonical_code(g)
                found.setdefault(code, ObstructionRecord(code, to_graph6(g), g.n, c, i, format_target(target)))
    recs = sorted(found.values(), key=lambda r: (r.order, r.code))
    return ObstructionReport(spec.cls, format_target(target), recs, tuple(sizes))


@dataclass(frozen=True)
class BoundVerdict:
    holds: bool
    bound: int
    extremal: tuple[ObstructionRecord, ...]
    violations: tuple[ObstructionRecord, ...]
    report: ObstructionReport


def verify_order_bound(spec: FamilySpec, p, claimed_bound: int,
                       order_cap: int = POLAR_MAX_ORDER) -> BoundVerdict:
    report = find_minimal_obstructions(spec, p, order_cap)
    over = tuple(r for r in report.records if r.order > claimed_bound)
    at = tuple(r for r in report.records if r.order == claimed_bound)
    return BoundVerdict(not over, claimed_bound, at, over, report)


@dataclass(frozen=True)
class ConjectureVerdict:
    k: int
    holds: bool
    violations: tuple[ObstructionRecord, ...]
    tight_family_minimal: bool
    tight_order: int
    report: ObstructionReport


def check_shape_conjecture(k: int, spec: FamilySpec | None = None) -> ConjectureVerdict:
    """Test ``k <= i <= 2k-2`` and ``c <= 2k-i-1`` on 2K2-split minimal ``(inf, k)`` obstructions."""
    from .twok2 import twok2_catalog
    if k not in (3, 4):
        raise GraphError("conjecture checks run for k in {3, 4}")
    if spec is None:
        spec = FamilySpec("2K2-split", (0, 4), (0, 5))
    report = find_minimal_obstructions(spec, (UNBOUNDED, k))
    bad = tuple(r for r in report.records if not (k <= r.i <= 2 * k - 2 and r.c <= 2 * k - r.i - 1))
    tight = twok2_catalog("tight_k", k=k)
    ok = bool(oracle_minimal_obstruction(tight, (UNBOUNDED, k)))
    return ConjectureVerdict(k, not bad, bad, ok, tight.n, report)


def codes_of(graphs: Iterable[Graph]) -> set[CanonicalCode]:
    return {canonical_code(g) for g in graphs}


__all__ = [
    "CANON_MAX_ORDER", "CLASS_H", "FamilySpec", "ObstructionRecord", "ObstructionReport",
    "all_graphs", "canonical_pattern", "check_shape_conjecture", "codes_of", "columns_of_pattern",
    "enumerate_family", "family_orbits", "find_minimal_obstructions", "format_target",
    "graph_from_columns", "labeled_family", "pattern_orbits", "verify_order_bound",
    "BoundVerdict", "ConjectureVerdict", "PolarityParams", "format_count",
]
