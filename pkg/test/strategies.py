'''Hypothesis strategies and conversions shared by the tests.'''
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from src.graph import Graph

@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 8, max_edges: int = 64) -> Graph:
    '''Arbitrary simple graphs.'''
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return Graph(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges))
    return Graph(n, frozenset(chosen))

@st.composite
def connected_graphs(draw, min_order: int = 1, max_order: int = 7) -> Graph:
    '''A random spanning tree plus random extra edges.'''
    n = draw(st.integers(min_order, max_order))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return Graph(n, frozenset(edges))

def from_networkx(graph: nx.Graph) -> Graph:
    '''Converts a networkx graph whose nodes are 0..n-1.'''
    return Graph(graph.number_of_nodes(), frozenset((u, v) if u < v else (v, u) for u, v in graph.edges()))

def atlas(min_order: int = 1, max_order: int = 7):
    '''Every graph of the networkx atlas (all graphs up to 7 vertices) in the order range.'''
    return [from_networkx(a) for a in nx.graph_atlas_g() if min_order <= a.number_of_nodes() <= max_order]
