'''
Canonical labeling and isomorphism for graphs up to MAX_CANONICAL_ORDER vertices.

Vertices are split into cells by (degree, distance multiset), the ordered
partition is refined until equitable, and remaining ties are broken by
individualizing each vertex of the first non-singleton cell in turn. The
certificate is the largest adjacency bit string over all discrete leaves.
Interchangeable twins in a cell are individualized once.
'''
#pylint: disable=invalid-name

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from src.graph import Edge, Graph, all_pairs_distances, degree_sequence, normalize_edge, relabel

MAX_CANONICAL_ORDER: int = 12

Cells = List[List[int]]

@dataclass(frozen=True)
class CanonicalForm:
    '''
    Relabeling invariant form of a graph.
    '''
    certificate: bytes
    '''Order byte followed by the canonical adjacency bits; usable as a dictionary key.'''
    edges: FrozenSet[Edge] = field(compare=False)
    '''Edge set under the canonical relabeling.'''
    labeling: Tuple[int, ...] = field(compare=False)
    '''Canonical position of each input vertex.'''

def _check_order(g: Graph) -> None:
    if g.order > MAX_CANONICAL_ORDER:
        raise ValueError(f'Exact isomorphism supports order <= {MAX_CANONICAL_ORDER}, got {g.order}.')

def _initial_cells(g: Graph) -> Cells:
    dist = all_pairs_distances(g)
    keys = {v: (g.degree(v), tuple(sorted(int(d) for d in dist.dist[v]))) for v in range(g.order)}
    return _split_by(list(range(g.order)), keys)

def _split_by(cell: List[int], keys: Dict[int, tuple]) -> Cells:
    groups: Dict[tuple, List[int]] = {}
    for v in cell:
        groups.setdefault(keys[v], []).append(v)
    return [groups[k] for k in sorted(groups)]

def _refine(g: Graph, cells: Cells) -> Cells:
    '''Splits cells by neighbor counts per cell until nothing changes.'''
    while True:
        cell_of = {v: i for i, cell in enumerate(cells) for v in cell}
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            keys = {v: tuple(sorted(Counter(cell_of[w] for w in g.adjacency[v]).items())) for v in cell}
            refined.extend(_split_by(cell, keys))
        if len(refined) == len(cells):
            return refined
        cells = refined

def _are_twins(g: Graph, u: int, w: int) -> bool:
    return g.adjacency[u] - {w} == g.adjacency[w] - {u}

def _representatives(g: Graph, cell: List[int]) -> List[int]:
    reps: List[int] = []
    for v in cell:
        if not any(_are_twins(g, v, r) for r in reps):
            reps.append(v)
    return reps

def _bits(g: Graph, position: Dict[int, int]) -> int:
    code = 0
    for u, v in g.edges:
        a, b = sorted((position[u], position[v]))
        code |= 1 << (b * (b - 1) // 2 + a)
    return code

def _search(g: Graph, cells: Cells) -> Tuple[int, Dict[int, int]]:
    cells = _refine(g, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        position = {cell[0]: p for p, cell in enumerate(cells)}
        return _bits(g, position), position
    cell = cells[target]
    best: Optional[Tuple[int, Dict[int, int]]] = None
    for v in _representatives(g, cell):
        split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
        leaf = _search(g, split)
        if best is None or leaf[0] > best[0]:
            best = leaf
    return best

@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> CanonicalForm:
    '''
    Canonical form of g.

    Raises:
        ValueError: if g.order > MAX_CANONICAL_ORDER.
    '''
    _check_order(g)
    if g.order == 0:
        return CanonicalForm(bytes([0]), frozenset(), ())
    code, position = _search(g, _initial_cells(g))
    width = (g.order * (g.order - 1) // 2 + 7) // 8
    certificate = bytes([g.order]) + code.to_bytes(width, 'big')
    labeling = tuple(position[v] for v in range(g.order))
    edges = frozenset(normalize_edge(labeling[u], labeling[v]) for u, v in g.edges)
    return CanonicalForm(certificate, edges, labeling)

def canonical_graph(g: Graph) -> Graph:
    '''g relabeled into its canonical vertex order.'''
    return relabel(g, canonical_form(g).labeling)

def isomorphism(g: Graph, h: Graph) -> Optional[Dict[int, int]]:
    '''
    A map from the vertices of g onto those of h preserving edges, or None.

    Raises:
        ValueError: if either order exceeds MAX_CANONICAL_ORDER.
    '''
    _check_order(g)
    _check_order(h)
    if g.order != h.order or g.size != h.size or degree_sequence(g) != degree_sequence(h):
        return None
    if g.order == 0:
        return {}
    return nx.vf2pp_isomorphism(g.nx, h.nx)

def are_isomorphic(g: Graph, h: Graph) -> bool:
    '''
    True iff an edge preserving bijection exists; different orders give False.

    Raises:
        ValueError: if either order exceeds MAX_CANONICAL_ORDER.
    '''
    return isomorphism(g, h) is not None
