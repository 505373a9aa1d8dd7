'''
Structural recognition of graphs with packing chromatic number 3.

A connected graph that is not a star has packing chromatic number 3 exactly
when it arises from a bipartite multigraph with sides U1 and U3 by subdividing
every edge once, attaching leaves to some vertices of U1 and U3, and performing
at most one T-add on each vertex of U3. A T-add on v attaches a new vertex w
to v together with an independent set X whose members are joined to v, to w,
or to both.

The vertices of such a graph fall into eight parts:

    V0  leaves on V1               V4  leaves on V3
    V1  side U1 of the multigraph  V5  degree 2 triangle vertices of a T-add
    V2  subdivision vertices       V6  other T-add hubs w
    V3  side U3 of the multigraph  V7  leaves on V6
'''
#pylint: disable=invalid-name

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, FrozenSet, List, Optional, Tuple

from src.graph import INFINITY, Graph, all_pairs_distances, in_triangle, is_connected, is_star
from src.packing import PackingColoring, is_valid

MAX_G3_ORDER: int = 12

class Part(IntEnum):
    '''Labels of the eight parts.'''
    V0 = 0
    V1 = 1
    V2 = 2
    V3 = 3
    V4 = 4
    V5 = 5
    V6 = 6
    V7 = 7

    def __str__(self) -> str:
        return self.name

@dataclass(frozen=True)
class G3Certificate:
    '''
    A labeling of every vertex with its part, plus the subdivided multigraph edges.
    '''
    parts: Tuple[Part, ...]
    '''parts[v] is the part of vertex v.'''
    multigraph_edges: FrozenSet[Tuple[int, int, int]]
    '''One (v1, mid, v3) triple per V2 vertex.'''

    def members(self, part: Part) -> List[int]:
        '''Vertices labeled part.'''
        return [v for v, p in enumerate(self.parts) if p == part]

    def lines(self) -> str:
        '''Lines "vertex Vk".'''
        return ''.join(f'{v} {p}\n' for v, p in enumerate(self.parts))

def _subdivision_triples(g: Graph, parts: Tuple[Part, ...]) -> FrozenSet[Tuple[int, int, int]]:
    triples = set()
    for mid, part in enumerate(parts):
        if part != Part.V2:
            continue
        ends = {parts[w]: w for w in g.adjacency[mid]}
        if Part.V1 in ends and Part.V3 in ends:
            triples.add((ends[Part.V1], mid, ends[Part.V3]))
    return frozenset(triples)

def _derive_parts(g: Graph, core: Dict[int, Part]) -> Optional[Tuple[Part, ...]]:
    '''Labels every non-core vertex from its degree and its neighbors in the core.'''
    parts: List[Optional[Part]] = [core.get(v) for v in range(g.order)]
    for v in range(g.order):
        if parts[v] is not None:
            continue
        sides = [core[w] for w in g.adjacency[v] if w in core]
        degree = g.degree(v)
        if Part.V1 in sides:
            if degree == 1:
                parts[v] = Part.V0
            elif degree == 2 and sorted(sides) == [Part.V1, Part.V3]:
                parts[v] = Part.V2
            else:
                return None
        elif Part.V3 in sides:
            if degree == 1:
                parts[v] = Part.V4
            elif degree == 2 and in_triangle(g, v):
                parts[v] = Part.V5
            else:
                parts[v] = Part.V6
    for v in range(g.order):
        if parts[v] is None:
            if g.degree(v) != 1:
                return None
            parts[v] = Part.V7
    return tuple(parts)

def _induced_coloring(g: Graph, parts: Tuple[Part, ...]) -> PackingColoring:
    '''
    V1 and V6 take color 2, V3 color 3, everything else color 1; a V5 vertex
    whose triangle has no V6 vertex takes color 2 when it is the larger id of
    its V5 pair.
    '''
    colors = []
    for v, part in enumerate(parts):
        match part:
            case Part.V1 | Part.V6:
                colors.append(2)
            case Part.V3:
                colors.append(3)
            case Part.V5:
                partners = [w for w in g.adjacency[v] if parts[w] == Part.V5]
                colors.append(2 if partners and v > partners[0] else 1)
            case _:
                colors.append(1)
    return PackingColoring(tuple(colors), 3)

def _has_structure(g: Graph, parts: Tuple[Part, ...]) -> bool:
    '''Checks the defining property of each part on g.'''
    dist = all_pairs_distances(g)
    for v, part in enumerate(parts):
        neighbors = [parts[w] for w in g.adjacency[v]]
        degree = len(neighbors)
        match part:
            case Part.V0:
                ok = neighbors == [Part.V1]
            case Part.V4:
                ok = neighbors == [Part.V3]
            case Part.V7:
                ok = neighbors == [Part.V6]
            case Part.V2:
                ok = sorted(neighbors) == [Part.V1, Part.V3]
            case Part.V1:
                ok = all(p in (Part.V0, Part.V2) for p in neighbors)
            case Part.V3:
                ok = all(p in (Part.V2, Part.V4, Part.V5, Part.V6) for p in neighbors) and _one_t_add(g, parts, v)
            case Part.V5:
                ok = degree == 2 and in_triangle(g, v) and sorted(neighbors) in ([Part.V3, Part.V5], [Part.V3, Part.V6])
            case Part.V6:
                ok = (neighbors.count(Part.V3) == 1 and degree >= 2
                      and all(p in (Part.V3, Part.V5, Part.V7) for p in neighbors)
                      and not (degree == 2 and in_triangle(g, v)))
            case _:
                ok = False
        if not ok:
            return False
    return _distances_divisible_by_four(dist, parts)

def _one_t_add(g: Graph, parts: Tuple[Part, ...], v: int) -> bool:
    '''v carries at most one hub, and every V5 neighbor belongs to that hub's triangle.'''
    hubs = [w for w in g.adjacency[v] if parts[w] == Part.V6]
    fives = [w for w in g.adjacency[v] if parts[w] == Part.V5]
    if len(hubs) > 1:
        return False
    if hubs:
        return all(g.has_edge(x, hubs[0]) for x in fives)
    return not fives or (len(fives) == 2 and g.has_edge(*fives))

def _distances_divisible_by_four(dist, parts: Tuple[Part, ...]) -> bool:
    for side in (Part.V1, Part.V3):
        members = [v for v, p in enumerate(parts) if p == side]
        for i, u in enumerate(members):
            for w in members[i + 1:]:
                d = dist(u, w)
                if d == INFINITY or d % 4 != 0:
                    return False
    return True

def validate_certificate(g: Graph, cert: G3Certificate) -> bool:
    '''
    True iff the labeling has the structure of the construction: every part
    satisfies its definition, V1 and V3 vertices are 4k apart within their
    side, multigraph_edges lists exactly the subdivided connections, and the
    coloring induced by the parts is a valid 3-packing coloring.

    Raises:
        ValueError: if the certificate does not label exactly the vertices of g.
    '''
    if len(cert.parts) != g.order:
        raise ValueError(f'The certificate labels {len(cert.parts)} vertices, the graph has {g.order}.')
    parts = tuple(Part(p) for p in cert.parts)
    if not _has_structure(g, parts):
        return False
    if cert.multigraph_edges != _subdivision_triples(g, parts):
        return False
    return is_valid(g, _induced_coloring(g, parts))

def recognize_g3(g: Graph) -> Optional[G3Certificate]:
    '''
    Certificate for packing chromatic number 3, or None.

    Stars (including K1 and K2) are rejected up front. Every assignment of the
    vertices to V1, V3 or neither is searched, pruned by the distance pattern of
    the subdivided multigraph (same side at distance 0 mod 4, opposite sides at
    2 mod 4); the remaining parts are then forced by degree and triangle
    membership. Among the valid certificates the lexicographically least label
    vector is returned.

    Raises:
        ValueError: if g is disconnected or g.order > MAX_G3_ORDER.
    '''
    if g.order > MAX_G3_ORDER:
        raise ValueError(f'Recognition supports order <= {MAX_G3_ORDER}, got {g.order}.')
    if not is_connected(g):
        raise ValueError('Recognition requires a connected graph.')
    if g.order == 0 or is_star(g):
        return None
    dist = all_pairs_distances(g)
    core: Dict[int, Part] = {}
    best: Optional[Tuple[Part, ...]] = None

    def fits(v: int, side: Part) -> bool:
        for w, other in core.items():
            d = dist(v, w)
            if d % 2 == 1 or d == 0:
                return False
            if (d % 4 == 0) != (other == side):
                return False
        return True

    def search(v: int) -> None:
        nonlocal best
        if v == g.order:
            if not core:
                return
            parts = _derive_parts(g, core)
            if parts is None or (best is not None and parts >= best):
                return
            cert = G3Certificate(parts, _subdivision_triples(g, parts))
            if validate_certificate(g, cert):
                best = parts
            return
        for side in (Part.V1, Part.V3):
            if fits(v, side):
                core[v] = side
                search(v + 1)
                del core[v]
        search(v + 1)

    search(0)
    if best is None:
        return None
    return G3Certificate(best, _subdivision_triples(g, best))

def parse_certificate(text: str, order: int) -> G3Certificate:
    '''
    Reads lines "vertex Vk"; the multigraph edges are rebuilt on validation.

    Raises:
        ValueError: on malformed lines or a vertex without a part.
    '''
    parts: List[Optional[Part]] = [None] * order
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2 or not tokens[0].isdigit() or tokens[1] not in Part.__members__:
            raise ValueError(f'Expected "vertex Vk", got {line!r}.')
        v = int(tokens[0])
        if v >= order:
            raise ValueError(f'The vertex {v} is not in 0..{order - 1}.')
        parts[v] = Part[tokens[1]]
    if any(p is None for p in parts):
        raise ValueError('Every vertex needs a part.')
    return G3Certificate(tuple(parts), frozenset())
