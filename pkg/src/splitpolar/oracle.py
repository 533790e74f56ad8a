"""Exhaustive ground truth for polarity, (k, l)-colorings and minimal obstructions.

Nothing here consults degree sequences or structural characterizations; every answer
comes from a pruned walk over vertex assignments, so the fast deciders
elsewhere in the package can be checked against it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .graph import Graph, GraphError, complement, delete_vertex, mask_of, vertices_of

UNBOUNDED = math.inf
Count = Union[int, float]

POLAR_MAX_ORDER = 16
COLORING_MAX_ORDER = 14


def parse_count(value) -> Count:
    """Accept a nonnegative int, ``math.inf``, or the strings ``"inf"``/digits."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞"):
            return UNBOUNDED
        if not text.isdigit():
            raise GraphError(f"count must be a nonnegative integer or 'inf', got {value!r}")
        return int(text)
    if isinstance(value, bool):
        raise GraphError("count must be numeric")
    if value == UNBOUNDED:
        return UNBOUNDED
    if isinstance(value, int) and value >= 0:
        return value
    raise GraphError(f"count must be a nonnegative integer or inf, got {value!r}")


def format_count(value: Count) -> str:
    return "inf" if value == UNBOUNDED else str(value)


@dataclass(frozen=True)
class PolarityParams:
    s: Count
    k: Count

    def __post_init__(self):
        object.__setattr__(self, "s", parse_count(self.s))
        object.__setattr__(self, "k", parse_count(self.k))

    def swapped(self) -> "PolarityParams":
        return PolarityParams(self.k, self.s)

    def capped(self, n: int) -> tuple[int, int]:
        """Finite caps equivalent to ``(s, k)`` on a graph of order ``n``."""
        return int(min(self.s, n)), int(min(self.k, n))

    def __str__(self) -> str:
        return f"({format_count(self.s)},{format_count(self.k)})"


def as_params(p) -> PolarityParams:
    if isinstance(p, PolarityParams):
        return p
    s, k = p
    return PolarityParams(s, k)


@dataclass(frozen=True)
class PolarPartition:
    A_parts: tuple[frozenset[int], ...]
    B_cliques: tuple[frozenset[int], ...]

    @property
    def A(self) -> frozenset[int]:
        return frozenset().union(*self.A_parts)

    @property
    def B(self) -> frozenset[int]:
        return frozenset().union(*self.B_cliques)

    def validate(self, g: Graph, p: PolarityParams | None = None) -> None:
        """Raise ``ValueError`` unless this is a polar partition of ``g`` (within ``p``)."""
        sets = list(self.A_parts) + list(self.B_cliques)
        if any(not part for part in sets):
            raise ValueError("empty part in polar partition")
        seen: set[int] = set()
        for part in sets:
            if seen & part:
                raise ValueError("parts overlap")
            seen |= part
        if seen != set(range(g.n)):
            raise ValueError("parts do not cover the vertex set")
        report_a = classify_side(g, self.A)
        report_b = classify_side(g, self.B)
        if report_a.multipartite_parts != len(self.A_parts):
            raise ValueError("A side is not complete multipartite with the listed parts")
        if report_b.cluster_components != len(self.B_cliques):
            raise ValueError("B side is not a cluster with the listed cliques")
        for part in self.A_parts:
            if not g.is_independent(mask_of(part)):
                raise ValueError("A part is not independent")
        for clique in self.B_cliques:
            if not g.is_clique(mask_of(clique)):
                raise ValueError("B clique is not a clique")
        if p is not None and (len(self.A_parts) > p.s or len(self.B_cliques) > p.k):
            raise ValueError(f"partition exceeds {p}")

    def as_lists(self) -> dict:
        return {"A_parts": [sorted(x) for x in self.A_parts],
                "B_cliques": [sorted(x) for x in self.B_cliques]}


@dataclass(frozen=True)
class SideReport:
    multipartite_parts: int | None
    cluster_components: int | None

    @property
    def neither(self) -> bool:
        return self.multipartite_parts is None and self.cluster_components is None


def _cluster_components(rows: Sequence[int], mask: int) -> list[int] | None:
    """Components of ``G[mask]`` if each one is a clique, else ``None``."""
    comps = []
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = (rows[v] & mask) | 1 << v
        for u in vertices_of(comp):
            if (rows[u] & mask) | 1 << u != comp:
                return None
        comps.append(comp)
        rest &= ~comp
    return comps


def classify_side(g: Graph, vertices) -> SideReport:
    """Report whether ``G[W]`` is complete multipartite and/or a cluster."""
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    clusters = _cluster_components(g.rows, mask)
    co = complement(g)
    parts = _cluster_components(co.rows, mask)
    return SideReport(None if parts is None else len(parts),
                      None if clusters is None else len(clusters))


# --------------------------------------------------------------------------
# polar partitions

def _polar_leaves(g: Graph, s_cap: int, k_cap: int, unipolar: bool = False
                  ) -> Iterator[tuple[list[int], list[int]]]:
    """Yield ``(A_parts, B_cliques)`` bitmask lists in ascending order of the A mask.

    Vertices are decided from ``n-1`` down to ``0`` with "put in B" tried
    first, which makes the enumeration order that of the integer ``mask(A)``.
    """
    rows = g.rows
    n = g.n
    a_parts: list[int] = []
    b_cliques: list[int] = []

    def walk(v: int, a_mask: int, b_mask: int):
        if v < 0:
            yield list(a_parts), list(b_cliques)
            return
        adj = rows[v]
        bit = 1 << v
        # B branch: the neighbours of v inside B must be exactly one clique, or none
        touch = adj & b_mask
        if touch == 0:
            if len(b_cliques) < k_cap:
                b_cliques.append(bit)
                yield from walk(v - 1, a_mask, b_mask | bit)
                b_cliques.pop()
        else:
            for j, cl in enumerate(b_cliques):
                if cl == touch:
                    b_cliques[j] = cl | bit
                    yield from walk(v - 1, a_mask, b_mask | bit)
                    b_cliques[j] = cl
                    break
        # A branch: the non-neighbours of v inside A must be exactly one part, or none
        miss = a_mask & ~adj
        if unipolar:
            if miss == 0:
                a_parts.append(bit)
                yield from walk(v - 1, a_mask | bit, b_mask)
                a_parts.pop()
            return
        if miss == 0:
            if len(a_parts) < s_cap:
                a_parts.append(bit)
                yield from walk(v - 1, a_mask | bit, b_mask)
                a_parts.pop()
        else:
            for j, part in enumerate(a_parts):
                if part == miss:
                    a_parts[j] = part | bit
                    yield from walk(v - 1, a_mask | bit, b_mask)
                    a_parts[j] = part
                    break

    yield from walk(n - 1, 0, 0)


def _to_partition(a_parts: list[int], b_cliques: list[int]) -> PolarPartition:
    key = lambda m: (m & -m)
    return PolarPartition(tuple(frozenset(vertices_of(m)) for m in sorted(a_parts, key=key)),
                          tuple(frozenset(vertices_of(m)) for m in sorted(b_cliques, key=key)))


def _check_order(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise GraphError(f"oracle supports n <= {limit}, got {g.n}")


def oracle_polar(g: Graph, p) -> PolarPartition | None:
    """First ``(s,k)``-polar partition in ascending A-mask order, or ``None``."""
    _check_order(g, POLAR_MAX_ORDER)
    p = as_params(p)
    s_cap, k_cap = p.capped(g.n)
    for a_parts, b_cliques in _polar_leaves(g, s_cap, k_cap):
        return _to_partition(a_parts, b_cliques)
    return None


def oracle_unipolar(g: Graph) -> PolarPartition | None:
    """Partition into a clique ``A`` and a cluster ``B`` (A given as singleton parts)."""
    _check_order(g, POLAR_MAX_ORDER)
    for a_parts, b_cliques in _polar_leaves(g, g.n, g.n, unipolar=True):
        return _to_partition(a_parts, b_cliques)
    return None


@lru_cache(maxsize=65536)
def _min_cliques(g: Graph) -> tuple[float, ...]:
    """Entry ``a`` is the fewest B-cliques over polar partitions with at most ``a`` A-parts."""
    best = [math.inf] * (g.n + 1)
    for a_parts, b_cliques in _polar_leaves(g, g.n, g.n):
        a, b = len(a_parts), len(b_cliques)
        if b < best[a]:
            best[a] = b
    for a in range(1, g.n + 1):
        best[a] = min(best[a], best[a - 1])
    return tuple(best)


def polar_profile(g: Graph) -> tuple[float, ...]:
    """Pareto data for all ``(s, k)`` at once; see ``oracle_is_polar``."""
    _check_order(g, POLAR_MAX_ORDER)
    return _min_cliques(g)


def oracle_is_polar(g: Graph, p) -> bool:
    p = as_params(p)
    table = polar_profile(g)
    best = table[int(min(p.s, g.n))]
    return best != math.inf and best <= p.k


UNIPOLAR = "unipolar"


def _witness(g: Graph, target) -> PolarPartition | None:
    if target == UNIPOLAR:
        return oracle_unipolar(g)
    return oracle_polar(g, target)


@dataclass(frozen=True)
class MinimalityResult:
    minimal: bool
    has_property: bool
    deleted_witnesses: tuple[PolarPartition | None, ...]

    def __bool__(self) -> bool:
        return self.minimal


def oracle_minimal_obstruction(g: Graph, p) -> MinimalityResult:
    """Minimal obstruction test for ``(s,k)``-polarity (or ``UNIPOLAR``).

    When minimal, ``deleted_witnesses[v]`` is a partition of ``G - v`` (in
    the relabeled vertex numbering of ``delete_vertex``).
    """
    _check_order(g, POLAR_MAX_ORDER)
    target = p if p == UNIPOLAR else as_params(p)
    if _witness(g, target) is not None:
        return MinimalityResult(False, True, ())
    witnesses = []
    for v in range(g.n):
        w = _witness(delete_vertex(g, v), target)
        if w is None:
            return MinimalityResult(False, False, ())
        witnesses.append(w)
    return MinimalityResult(True, False, tuple(witnesses))


# --------------------------------------------------------------------------
# (k, l)-colorings

@dataclass(frozen=True)
class ColoringWitness:
    indep_classes: tuple[frozenset[int], ...]
    clique_classes: tuple[frozenset[int], ...]

    def validate(self, g: Graph, k: int | None = None, l: int | None = None) -> None:
        if k is not None and len(self.indep_classes) != k:
            raise ValueError("wrong number of independent classes")
        if l is not None and len(self.clique_classes) != l:
            raise ValueError("wrong number of clique classes")
        seen: set[int] = set()
        for cls in self.indep_classes + self.clique_classes:
            if seen & cls:
                raise ValueError("classes overlap")
            seen |= cls
        if seen != set(range(g.n)):
            raise ValueError("classes do not cover the vertex set")
        for cls in self.indep_classes:
            if not g.is_independent(mask_of(cls)):
                raise ValueError("independent class has an edge")
        for cls in self.clique_classes:
            if not g.is_clique(mask_of(cls)):
                raise ValueError("clique class misses an edge")


def oracle_coloring(g: Graph, k: int, l: int) -> ColoringWitness | None:
    """Partition into exactly ``k`` independent sets and ``l`` cliques (empty classes allowed)."""
    _check_order(g, COLORING_MAX_ORDER)
    k, l = int(k), int(l)
    if k < 0 or l < 0:
        raise GraphError("class counts must be nonnegative")
    rows = g.rows
    # high-degree vertices first keeps the independent classes tight early on
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    ind = [0] * k
    cli = [0] * l

    def place(idx: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        bit = 1 << v
        tried_empty = False
        for j in range(k):
            cls = ind[j]
            if cls == 0:
                if tried_empty:
                    continue
                tried_empty = True
            elif rows[v] & cls:
                continue
            ind[j] = cls | bit
            if place(idx + 1):
                return True
            ind[j] = cls
        tried_empty = False
        for j in range(l):
            cls = cli[j]
            if cls == 0:
                if tried_empty:
                    continue
                tried_empty = True
            elif rows[v] & cls != cls:
                continue
            cli[j] = cls | bit
            if place(idx + 1):
                return True
            cli[j] = cls
        return False

    if not place(0):
        return None
    return ColoringWitness(tuple(frozenset(vertices_of(m)) for m in ind),
                           tuple(frozenset(vertices_of(m)) for m in cli))


def oracle_bicolorable(g: Graph, z: int) -> bool:
    """True iff ``G`` is ``(j, z-j)``-colorable for every ``0 <= j <= z``."""
    return all(oracle_coloring(g, j, z - j) is not None for j in range(z + 1))


def oracle_chromatic(g: Graph) -> int:
    return next(k for k in range(g.n + 1) if oracle_coloring(g, k, 0) is not None)


def oracle_clique_cover(g: Graph) -> int:
    return next(l for l in range(g.n + 1) if oracle_coloring(g, 0, l) is not None)


def oracle_cochromatic(g: Graph) -> int:
    for z in range(g.n + 1):
        if any(oracle_coloring(g, j, z - j) is not None for j in range(z + 1)):
            return z
    raise AssertionError("unreachable: n singleton classes always work")


def oracle_bichromatic(g: Graph) -> int:
    for z in range(g.n + 1):
        if oracle_bicolorable(g, z):
            return z
    raise AssertionError("unreachable: n singleton classes always work")


def oracle_minimal_bicolor_obstruction(g: Graph, z: int) -> bool:
    if oracle_bicolorable(g, z):
        return False
    return all(oracle_bicolorable(delete_vertex(g, v), z) for v in range(g.n))
