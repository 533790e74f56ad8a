"""Immutable simple graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Every row ``rows[v]`` is an integer whose bit ``u`` is set iff ``uv`` is an
edge.  Graphs are hashable values; all operations return new graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62


class GraphError(ValueError):
    """Rejected input: a parameter or vertex set that the operation cannot take."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    return list(_bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("one adjacency row per vertex required")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise GraphError(f"row {v} has a loop or out-of-range bit")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphError(f"bad edge ({u}, {v}) for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return vertices_of(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.rows[v] & ((1 << v) - 1))]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_clique(self, mask: int) -> bool:
        return all((self.rows[v] | 1 << v) & mask == mask for v in _bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(not self.rows[v] & mask for v in _bits(mask))

    def completely_adjacent(self, a: int, b: int) -> bool:
        return all(self.rows[v] & b == b for v in _bits(a))

    def completely_nonadjacent(self, a: int, b: int) -> bool:
        return all(not self.rows[v] & b for v in _bits(a))

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of ``G[mask]`` as bitmasks, ordered by least vertex."""
        if mask is None:
            mask = self.full_mask
        comps = []
        rest = mask
        while rest:
            seen = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & rest & ~seen
                seen |= frontier
            comps.append(seen)
            rest &= ~seen
        return comps

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation")
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in _bits(self.rows[v]))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# --------------------------------------------------------------------------
# constructors

def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("P_n needs n >= 1")
    return Graph.from_edges(n, [(j, j + 1) for j in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("C_n needs n >= 3")
    return Graph.from_edges(n, [(j, (j + 1) % n) for j in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError("combined order exceeds the vertex limit")
    shift = g.n
    return Graph(g.n + h.n, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError("combined order exceeds the vertex limit")
    shift = g.n
    gmask = g.full_mask
    hmask = h.full_mask << shift
    return Graph(g.n + h.n,
                 tuple(r | hmask for r in g.rows) + tuple((r << shift) | gmask for r in h.rows))


def compose(op: str, g: Graph, h: Graph) -> Graph:
    if op == "disjoint_union":
        return disjoint_union(g, h)
    if op == "join":
        return join(g, h)
    raise GraphError(f"unknown composition {op!r}")


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """``G[W]`` with the vertices of ``W`` relabeled in increasing order."""
    if isinstance(vertices, int):
        mask = vertices
        if mask & ~g.full_mask:
            raise GraphError("vertex mask out of range")
    else:
        mask = 0
        for v in vertices:
            if not 0 <= v < g.n:
                raise GraphError(f"vertex {v} out of range")
            mask |= 1 << v
    keep = vertices_of(mask)
    index = {v: j for j, v in enumerate(keep)}
    rows = tuple(mask_of(index[u] for u in _bits(g.rows[v] & mask)) for v in keep)
    return Graph(len(keep), rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.full_mask & ~(1 << v))


_FIXED = {
    # labelings follow the drawings of the minimal 2K2-split obstructions
    "2K2": (4, [(0, 1), (2, 3)]),
    "3K2": (6, [(0, 3), (1, 4), (2, 5)]),
    "K2+P3": (5, [(0, 1), (0, 2), (3, 4)]),
    "K2+K3": (5, [(0, 1), (0, 2), (1, 2), (3, 4)]),
    "P5": (5, [(0, 1), (1, 2), (3, 4), (4, 0)]),
    "co-banner": (5, [(0, 1), (1, 2), (3, 4), (4, 0), (3, 0)]),
}


def build_named(family: str, *params: int) -> Graph:
    """Build a named graph.

    Parametric families: ``K n``, ``nK1 n`` (edgeless), ``P n``, ``C n``.
    Fixed graphs: ``C4``, ``C5``, ``P3``, ``P4``, ``2K2``, ``3K2``, ``K2+P3``,
    ``K2+K3``, ``P5``, ``co-banner``.  Paths and cycles are labeled along the
    path/cycle; ``K2+P3`` puts the P3 centre at 0.
    """
    if family in ("K", "nK1", "P", "C"):
        if len(params) != 1:
            raise GraphError(f"{family} takes one size parameter")
        (n,) = params
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        return {"K": complete_graph, "nK1": empty_graph, "P": path_graph, "C": cycle_graph}[family](n)
    if params:
        raise GraphError(f"{family} takes no parameters")
    if family in ("C4", "C5"):
        return cycle_graph(int(family[1]))
    if family in ("P3", "P4"):
        return path_graph(int(family[1]))
    if family in _FIXED:
        n, edges = _FIXED[family]
        return Graph.from_edges(n, edges)
    raise GraphError(f"unknown graph family {family!r}")


H_GRAPHS = ("2K2", "C4", "C5")


def h_split_graph(h: str, c: int, i: int, ci_edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Strict H-split graph with clique ``C``, copy ``S`` of ``h``, independent ``I``.

    Vertices ``0..c-1`` form C, the next ``|H|`` vertices carry H in its
    named labeling, and the last ``i`` form I.  ``ci_edges`` holds pairs
    ``(a, b)`` meaning C-vertex ``a`` is adjacent to I-vertex ``b`` (both
    0-based within their side).
    """
    if h not in H_GRAPHS:
        raise GraphError(f"H must be one of {H_GRAPHS}")
    if c < 0 or i < 0:
        raise GraphError("part sizes must be nonnegative")
    hg = build_named(h)
    base = join(complete_graph(c), hg)
    g = disjoint_union(base, empty_graph(i))
    extra = []
    off = c + hg.n
    for a, b in ci_edges:
        if not (0 <= a < c and 0 <= b < i):
            raise GraphError(f"C-I edge ({a}, {b}) out of range")
        extra.append((a, off + b))
    return add_edges(g, extra)


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.rows)
    for u, v in edges:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"bad edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.rows)
    for u, v in edges:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


# --------------------------------------------------------------------------
# degree sequences

@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]
    order: tuple[int, ...]  # order[j] is the vertex with the (j+1)-th largest degree

    def __len__(self) -> int:
        return len(self.degrees)

    def d(self, j: int) -> int:
        """1-based access ``d_j``."""
        return self.degrees[j - 1]


def degree_sequence(g: Graph) -> DegreeSequence:
    """Degrees in nonincreasing order; ties keep ascending vertex index."""
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-degs[v], v))
    return DegreeSequence(tuple(degs[v] for v in order), tuple(order))


# --------------------------------------------------------------------------
# induced subgraph search

def contains_induced(g: Graph, h: Graph) -> frozenset[int] | None:
    """Return a vertex set ``W`` with ``G[W]`` isomorphic to ``H``, or ``None``."""
    if h.n > g.n:
        return None
    if h.n == 0:
        return frozenset()
    # map H vertices in an order where each (after the first) touches earlier ones when possible
    hdeg = h.degrees()
    order = [max(range(h.n), key=lambda v: (hdeg[v], -v))]
    placed = 1 << order[0]
    while len(order) < h.n:
        rest = [v for v in range(h.n) if not placed >> v & 1]
        v = max(rest, key=lambda u: ((h.rows[u] & placed).bit_count(), hdeg[u], -u))
        order.append(v)
        placed |= 1 << v
    gdeg = g.degrees()
    image = [0] * h.n

    def extend(depth: int, used: int) -> bool:
        if depth == h.n:
            return True
        hv = order[depth]
        cand = g.full_mask & ~used
        for j in range(depth):
            hu = order[j]
            gu = image[hu]
            if h.rows[hv] >> hu & 1:
                cand &= g.rows[gu]
            else:
                cand &= ~g.rows[gu]
        for gv in _bits(cand):
            if gdeg[gv] < hdeg[hv]:
                continue
            image[hv] = gv
            if extend(depth + 1, used | 1 << gv):
                return True
        return False

    if extend(0, 0):
        return frozenset(image)
    return None


# --------------------------------------------------------------------------
# canonical form

CANON_MAX_ORDER = 16


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Order plus the minimal upper-triangle bit string (as an integer)."""
    n: int
    bits: int

    def hex(self) -> str:
        return f"{self.n}:{self.bits:x}"


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; fragment order depends only on neighbour counts."""
    masks = [mask_of(c) for c in cells]
    changed = True
    while changed:
        changed = False
        j = 0
        while j < len(cells):
            w = masks[j]
            out_cells = []
            out_masks = []
            for cell, m in zip(cells, masks):
                if len(cell) == 1:
                    out_cells.append(cell)
                    out_masks.append(m)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((g.rows[v] & w).bit_count(), []).append(v)
                if len(groups) == 1:
                    out_cells.append(cell)
                    out_masks.append(m)
                    continue
                changed = True
                for key in sorted(groups):
                    out_cells.append(groups[key])
                    out_masks.append(mask_of(groups[key]))
            cells, masks = out_cells, out_masks
            j += 1
    return cells


def _leaf_bits(g: Graph, perm: list[int]) -> int:
    bits = 0
    for j in range(1, len(perm)):
        row = g.rows[perm[j]]
        for i in range(j):
            bits = bits << 1 | (row >> perm[i] & 1)
    return bits


def canonical_code(g: Graph) -> CanonicalCode:
    """Isomorphism-invariant code via individualisation-refinement.

    Leaves of the search tree are discrete ordered partitions; the code is
    the minimum upper-triangle bit string over all leaves.  Branching skips
    twins (vertices whose transposition is an automorphism).
    """
    if g.n > CANON_MAX_ORDER:
        raise GraphError(f"canonical_code supports n <= {CANON_MAX_ORDER}")
    if g.n == 0:
        return CanonicalCode(0, 0)
    degs = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(degs[v], []).append(v)
    start = _refine(g, [by_deg[d] for d in sorted(by_deg)])
    best = [None]

    def search(cells: list[list[int]]) -> None:
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            bits = _leaf_bits(g, [c[0] for c in cells])
            if best[0] is None or bits < best[0]:
                best[0] = bits
            return
        cell = cells[target]
        reps = []
        for v in cell:
            if not any((g.rows[v] & ~(1 << u)) == (g.rows[u] & ~(1 << v)) for u in reps):
                reps.append(v)
        for v in reps:
            rest = [u for u in cell if u != v]
            search(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(start)
    return CanonicalCode(g.n, best[0])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and sorted(g.degrees()) == sorted(h.degrees()) and canonical_code(g) == canonical_code(h)


# --------------------------------------------------------------------------
# graph6

def to_graph6(g: Graph) -> str:
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 line")
    codes = [ord(ch) for ch in line]
    for ch in codes:
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch} outside 63..126")
    n = codes[0] - 63
    if n > MAX_ORDER:
        raise Graph6Error("multi-byte order headers are not supported")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = codes[1:]
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} body bytes for n={n}, got {len(body)}")
    rows = [0] * n
    pos = 0
    j, i = 1, 0
    for byte in body:
        val = byte - 63
        for shift in range(5, -1, -1):
            if pos == nbits:
                break
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, tuple(rows))


def graph6_codec(direction: str, payload):
    if direction == "encode":
        return to_graph6(payload)
    if direction == "decode":
        return from_graph6(payload)
    raise GraphError(f"unknown direction {direction!r}")
