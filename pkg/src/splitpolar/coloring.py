"""(k, l)-colorings of pseudo-split graphs and the related coloring numbers."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, build_named, complete_graph, cycle_graph, disjoint_union, empty_graph, join
from .oracle import oracle_bichromatic, oracle_cochromatic
from .recognition import recognize_pseudo_split


@dataclass(frozen=True)
class ColoringProfile:
    chi: int
    theta: int
    cochromatic: int
    bichromatic: int
    source: str  # "formula", or "formula+oracle" when the last two came from search


def _classify(g: Graph):
    res = recognize_pseudo_split(g)
    if res.kind == "none":
        raise GraphError("graph is not pseudo-split")
    return res


def ps_coloring_profile(g: Graph) -> ColoringProfile:
    res = _classify(g)
    if res.kind == "imperfect":
        c, i = res.partition.c, res.partition.i
        return ColoringProfile(c + 3, i + 3, 3, max(c, i) + 3, "formula")
    return ColoringProfile(res.chi, res.theta, oracle_cochromatic(g), oracle_bichromatic(g),
                           "formula+oracle")


def ps_is_kl_colorable(g: Graph, k: int, l: int) -> bool:
    """Whether ``g`` splits into ``k`` independent sets and ``l`` cliques."""
    if k < 0 or l < 0:
        raise GraphError("k and l must be nonnegative")
    res = _classify(g)
    if res.kind == "imperfect":
        c, i = res.partition.c, res.partition.i
        if l == 0:
            return c <= k - 3
        if k == 0:
            return i <= l - 3
        return k + l >= 3
    if k == 0 and l == 0:
        return g.n == 0
    if l == 0:
        return k >= res.chi
    if k == 0:
        return l >= res.theta
    return True


def bicolor_obstruction_family(z: int) -> list[Graph]:
    """Pseudo-split minimal obstructions to being ``(j, z - j)``-colorable for all ``j``."""
    if z < 1:
        raise GraphError("z must be at least 1")
    if z == 1:
        return [complete_graph(2), empty_graph(2)]
    if z == 2:
        return [complete_graph(3), cycle_graph(5), empty_graph(3)]
    c5 = build_named("C5")
    return [complete_graph(z + 1), join(c5, complete_graph(z - 2)),
            empty_graph(z + 1), disjoint_union(c5, empty_graph(z - 2))]
