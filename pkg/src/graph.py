'''
Simple undirected graphs on dense integer vertex ids, their distance tables,
deletions and cycle structure.
'''
#pylint: disable=invalid-name

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from src.utilities import is_not_negative

Edge = Tuple[int, int]

INFINITY: int = int(np.iinfo(np.int16).max)
'''Distance between vertices in different components; larger than any supported order.'''

MAX_CYCLE_ORDER: int = 12

def normalize_edge(u: int, v: int) -> Edge:
    '''Returns the edge as an ordered pair (smaller id first).'''
    return (u, v) if u < v else (v, u)

@dataclass(frozen=True)
class Graph:
    '''
    Simple undirected graph with vertices 0..order-1.

    Labels are optional display names (e.g. the letters used in family drawings);
    they take no part in equality or hashing.
    '''
    order: int
    '''Number of vertices.'''
    edges: FrozenSet[Edge] = field(default_factory=frozenset)
    '''Unordered vertex pairs, stored with the smaller id first.'''
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)
    '''Optional vertex names, indexed by vertex id.'''

    def __post_init__(self):
        if not is_not_negative(self.order):
            raise ValueError(f'The graph order: {self.order} must not be negative.')
        normalized: Set[Edge] = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f'The edge ({u}, {v}) is a loop.')
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f'The edge ({u}, {v}) has an endpoint outside 0..{self.order - 1}.')
            normalized.add(normalize_edge(u, v))
        object.__setattr__(self, 'edges', frozenset(normalized))
        if self.labels is not None:
            if len(self.labels) != self.order:
                raise ValueError(f'Expected {self.order} vertex labels, got {len(self.labels)}.')
            object.__setattr__(self, 'labels', tuple(self.labels))

    @staticmethod
    def from_edges(order: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> 'Graph':
        '''
        Builds a graph, rejecting duplicate edges (in either orientation).

        Raises:
            ValueError: on a loop, duplicate edge or endpoint out of range.
        '''
        seen: Set[Edge] = set()
        for u, v in edges:
            e = normalize_edge(u, v)
            if e in seen:
                raise ValueError(f'The edge ({u}, {v}) appears more than once.')
            seen.add(e)
        return Graph(order, frozenset(seen), None if labels is None else tuple(labels))

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        '''Neighbor sets indexed by vertex.'''
        neighbors: List[Set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(n) for n in neighbors)

    @cached_property
    def nx(self) -> nx.Graph:
        '''networkx view with nodes 0..order-1; built once, do not mutate.'''
        view = nx.Graph()
        view.add_nodes_from(range(self.order))
        view.add_edges_from(self.edge_list)
        return view

    @cached_property
    def edge_list(self) -> Tuple[Edge, ...]:
        '''Edges in lexicographic order.'''
        return tuple(sorted(self.edges))

    @property
    def size(self) -> int:
        '''Number of edges.'''
        return len(self.edges)

    def degree(self, v: int) -> int:
        '''Number of neighbors of v.'''
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        '''True if uv is an edge.'''
        return normalize_edge(u, v) in self.edges

    def label(self, v: int) -> str:
        '''Display name of v, its id if unlabeled.'''
        return str(v) if self.labels is None else self.labels[v]

    def vertex(self, label: str) -> int:
        '''Vertex id carrying the label.'''
        if self.labels is None or label not in self.labels:
            raise ValueError(f'No vertex is labeled {label}.')
        return self.labels.index(label)

@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    '''Hop distances between all pairs of vertices, INFINITY across components.'''
    dist: np.ndarray

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    @property
    def order(self) -> int:
        '''Number of vertices covered by the table.'''
        return self.dist.shape[0]

    def ball(self, v: int, radius: int) -> np.ndarray:
        '''Vertices within distance radius of v (v included).'''
        return np.flatnonzero(self.dist[v] <= radius)

def path_graph(n: int) -> Graph:
    '''P_n.'''
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))

def cycle_graph(n: int) -> Graph:
    '''C_n for n >= 3.'''
    if n < 3:
        raise ValueError(f'A cycle needs at least 3 vertices, got {n}.')
    return Graph(n, frozenset(normalize_edge(i, (i + 1) % n) for i in range(n)))

def complete_graph(n: int) -> Graph:
    '''K_n.'''
    return Graph(n, frozenset((u, v) for v in range(n) for u in range(v)))

def star_graph(k: int) -> Graph:
    '''K_{1,k} with center 0.'''
    return Graph(k + 1, frozenset((0, v) for v in range(1, k + 1)))

def disjoint_union(g: Graph, h: Graph) -> Graph:
    '''g followed by h, with the vertices of h shifted by g.order.'''
    shifted = ((u + g.order, v + g.order) for u, v in h.edges)
    return Graph(g.order + h.order, g.edges | frozenset(shifted))

def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    '''Graph with vertex v renamed permutation[v].'''
    if sorted(permutation) != list(range(g.order)):
        raise ValueError(f'{permutation} is not a permutation of 0..{g.order - 1}.')
    labels = None
    if g.labels is not None:
        names = [''] * g.order
        for v, p in enumerate(permutation):
            names[p] = g.labels[v]
        labels = tuple(names)
    return Graph(g.order, frozenset(normalize_edge(permutation[u], permutation[v]) for u, v in g.edges), labels)

def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    '''Subgraph induced by vertices; ids are compacted in increasing order.'''
    kept = sorted(set(vertices))
    index = {v: i for i, v in enumerate(kept)}
    edges = frozenset((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    labels = None if g.labels is None else tuple(g.labels[v] for v in kept)
    return Graph(len(kept), edges, labels)

def delete_vertex(g: Graph, v: int) -> Graph:
    '''
    G - v with ids above v shifted down by one.

    Raises:
        ValueError: if v is not a vertex of g.
    '''
    if not 0 <= v < g.order:
        raise ValueError(f'The vertex {v} is not in 0..{g.order - 1}.')
    return induced_subgraph(g, (u for u in range(g.order) if u != v))

def delete_edge(g: Graph, e: Tuple[int, int]) -> Graph:
    '''
    G - e on the same vertex set.

    Raises:
        ValueError: if e is not an edge of g.
    '''
    edge = normalize_edge(*e)
    if edge not in g.edges:
        raise ValueError(f'The edge {e} is not in the graph.')
    return Graph(g.order, g.edges - {edge}, g.labels)

def all_pairs_distances(g: Graph) -> DistanceMatrix:
    '''Hop distances from every vertex, INFINITY for unreachable pairs.'''
    table = np.full((g.order, g.order), INFINITY, dtype=np.int16)
    for source, lengths in nx.all_pairs_shortest_path_length(g.nx):
        table[source, list(lengths)] = list(lengths.values())
    table.setflags(write=False)
    return DistanceMatrix(table)

def components(g: Graph) -> List[List[int]]:
    '''Vertex sets of the connected components, each sorted, ordered by smallest vertex.'''
    return sorted(sorted(part) for part in nx.connected_components(g.nx))

def is_connected(g: Graph) -> bool:
    '''The empty graph counts as connected.'''
    return len(components(g)) <= 1

def is_tree(g: Graph) -> bool:
    '''Connected with order - 1 edges.'''
    return g.order >= 1 and g.size == g.order - 1 and is_connected(g)

def is_star(g: Graph) -> bool:
    '''Connected graph where one vertex touches every edge (K1 and K2 included).'''
    if not is_connected(g) or g.order == 0:
        return False
    return g.order <= 2 or any(g.degree(v) == g.order - 1 == g.size for v in range(g.order))

def in_triangle(g: Graph, v: int) -> bool:
    '''True if v has two adjacent neighbors.'''
    neighbors = sorted(g.adjacency[v])
    return any(g.has_edge(a, b) for i, a in enumerate(neighbors) for b in neighbors[i + 1:])

def clique_number(g: Graph) -> int:
    '''Size of a largest clique (0 for the empty graph).'''
    return max((len(clique) for clique in nx.find_cliques(g.nx)), default=0)

def cycle_spectrum(g: Graph) -> Set[int]:
    '''
    Lengths of all cycles occurring as subgraphs.

    The enumeration stops once every length 3..order has been seen.

    Raises:
        ValueError: if g.order exceeds MAX_CYCLE_ORDER.
    '''
    if g.order > MAX_CYCLE_ORDER:
        raise ValueError(f'Cycle enumeration supports order <= {MAX_CYCLE_ORDER}, got {g.order}.')
    lengths: Set[int] = set()
    every_length = set(range(3, g.order + 1))
    for cycle in nx.simple_cycles(g.nx, length_bound=g.order):
        lengths.add(len(cycle))
        if lengths == every_length:
            break
    return lengths

def apex_gadget(n: int) -> Graph:
    '''C_n (vertices 0..n-1) plus an apex n joined to the adjacent cycle vertices 0 and 1.'''
    cycle = cycle_graph(n)
    return Graph(n + 1, cycle.edges | {(0, n), (1, n)})

def leaf_pair_graph(n: int, d: int) -> Graph:
    '''C_n with a single leaf on vertex 0 and another on vertex d.'''
    if not 0 < d <= n // 2:
        raise ValueError(f'The attachment distance {d} must lie in 1..{n // 2}.')
    cycle = cycle_graph(n)
    return Graph(n + 2, cycle.edges | {(0, n), (d, n + 1)})

def layer_edge_violations(g: Graph) -> List[Tuple[int, Edge]]:
    '''
    Pairs (root, edge) where both edge ends are equidistant from root and the
    edge lies in no triangle.
    '''
    dist = all_pairs_distances(g)
    violations: List[Tuple[int, Edge]] = []
    for u, v in g.edge_list:
        if g.adjacency[u] & g.adjacency[v]:
            continue
        violations.extend((r, (u, v)) for r in range(g.order)
                          if dist(r, u) == dist(r, v) != INFINITY)
    return violations

def degree_sequence(g: Graph) -> Tuple[int, ...]:
    '''Degrees in descending order.'''
    return tuple(sorted((g.degree(v) for v in range(g.order)), reverse=True))

