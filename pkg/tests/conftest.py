
import networkx as nx
from hypothesis import settings, strategies as st

from splitpolar.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def h_split_patterns(draw, h="C5", max_c=3, max_i=3):
    from splitpolar.graph import h_split_graph
    c = draw(st.integers(0, max_c))
    i = draw(st.integers(0, max_i))
    edges = [(a, b) for a in range(c) for b in range(i) if draw(st.booleans())]
    return h_split_graph(h, c, i, edges)


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out
