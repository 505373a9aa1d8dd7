'''
Exact packing coloring: validity, k-colorability search and the packing chromatic number.

A k-packing coloring gives every vertex a color in 1..k so that two vertices
sharing color i are more than i apart.
'''
#pylint: disable=invalid-name

from dataclasses import dataclass
from enum import StrEnum
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.graph import Graph, all_pairs_distances, clique_number, components, induced_subgraph, is_star
from src.utilities import is_positive

@dataclass(frozen=True)
class PackingColoring:
    '''
    Colors indexed by vertex; 0 marks an unassigned vertex.
    '''
    assignment: Tuple[int, ...]
    '''assignment[v] is the color of v.'''
    k: int
    '''Number of colors permitted.'''

    def color(self, v: int) -> int:
        '''Color of vertex v.'''
        return self.assignment[v]

    @property
    def colors_used(self) -> int:
        '''Largest color actually assigned.'''
        return max(self.assignment, default=0)

    @staticmethod
    def from_labels(g: Graph, colors: Dict[str, int], k: Optional[int] = None) -> 'PackingColoring':
        '''
        Builds a coloring from a map of vertex labels to colors.

        Raises:
            ValueError: if a label is not a vertex of g.
        '''
        assignment = [0] * g.order
        for label, c in colors.items():
            assignment[g.vertex(label)] = c
        return PackingColoring(tuple(assignment), max(colors.values(), default=0) if k is None else k)

@dataclass(frozen=True)
class ChiRhoResult:
    '''
    The packing chromatic number with a witness coloring.
    '''
    value: int
    witness: PackingColoring
    lower_bound_trace: str
    '''How the search closed: starting bound and the exhausted color counts per component.'''

class Shape(StrEnum):
    '''Graph shapes with known packing chromatic numbers.'''
    PATH = 'path'
    CYCLE = 'cycle'
    CLIQUE = 'clique'

def is_valid(g: Graph, c: PackingColoring) -> bool:
    '''
    True iff c uses colors 1..c.k and same colored vertices are far enough apart.

    Raises:
        ValueError: if some vertex of g has no color.
    '''
    if len(c.assignment) != g.order or any(x == 0 for x in c.assignment):
        raise ValueError('The coloring must assign every vertex of the graph.')
    colors = np.array(c.assignment, dtype=int)
    if np.any(colors < 1) or np.any(colors > c.k):
        return False
    dist = all_pairs_distances(g).dist
    for i in np.unique(colors):
        members = np.flatnonzero(colors == i)
        block = dist[np.ix_(members, members)]
        off_diagonal = ~np.eye(len(members), dtype=bool)
        if np.any(block[off_diagonal] <= i):
            return False
    return True

def find_k_packing_coloring(g: Graph, k: int) -> Optional[PackingColoring]:
    '''
    Backtracking search for a k-packing coloring.

    Vertices are visited by descending degree (ties by id) and colors tried
    ascending. For each color i a bit mask holds every vertex within distance i
    of a vertex already colored i.

    Returns:
        A valid coloring, or None when none exists.
    '''
    if not is_positive(k):
        raise ValueError(f'The number of colors: {k} must be positive.')
    n = g.order
    if n == 0:
        return PackingColoring((), k)
    dist = all_pairs_distances(g)
    balls: List[List[int]] = [[]]
    for i in range(1, k + 1):
        radius = min(i, n)
        balls.append([sum(1 << int(u) for u in dist.ball(v, radius)) for v in range(n)])
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    forbidden = [0] * (k + 1)
    assignment = [0] * n

    def assign(index: int) -> bool:
        if index == n:
            return True
        v = order[index]
        for i in range(1, k + 1):
            if forbidden[i] >> v & 1:
                continue
            saved = forbidden[i]
            forbidden[i] |= balls[i][v]
            assignment[v] = i
            if assign(index + 1):
                return True
            forbidden[i] = saved
        assignment[v] = 0
        return False

    return PackingColoring(tuple(assignment), k) if assign(0) else None

def lower_bound(g: Graph) -> int:
    '''
    Sound lower bound on the packing chromatic number.

    A component with an edge needs 2 colors, one that is not a star needs 3,
    and a clique needs one color per vertex.
    '''
    if g.order == 0:
        return 0
    bound = 1
    for part in components(g):
        component = induced_subgraph(g, part)
        if component.size == 0:
            continue
        bound = max(bound, 2 if is_star(component) else 3)
    return max(bound, clique_number(g))

def chi_rho(g: Graph) -> ChiRhoResult:
    '''
    Exact packing chromatic number, solved per component from lower_bound upward.

    Raises:
        ValueError: if g has no vertices.
    '''
    if g.order == 0:
        raise ValueError('The packing chromatic number is undefined for the empty graph.')
    assignment = [0] * g.order
    trace: List[str] = []
    for part in components(g):
        component = induced_subgraph(g, part)
        start = lower_bound(component)
        k = start
        coloring = find_k_packing_coloring(component, k)
        while coloring is None:
            k += 1
            coloring = find_k_packing_coloring(component, k)
        closing = 'bound attained' if k == start else f'k={start}..{k - 1} exhausted'
        trace.append(f'component {part[0]}: lower bound {start}, {closing}, chi={k}')
        for index, v in enumerate(part):
            assignment[v] = coloring.color(index)
    value = max(assignment)
    return ChiRhoResult(value, PackingColoring(tuple(assignment), value), '; '.join(trace))

def chi_rho_closed_form(shape: Shape, n: int) -> int:
    '''
    Known values: K_n needs n colors; P_1 needs 1, P_2 and P_3 need 2, longer
    paths need 3; C_n needs 3 when n = 3 or 4 divides n, otherwise 4.

    Raises:
        ValueError: if n < 1, or n < 3 for a cycle.
    '''
    if not is_positive(n):
        raise ValueError(f'The order: {n} must be positive.')
    match Shape(shape):
        case Shape.CLIQUE:
            return n
        case Shape.PATH:
            return 1 if n == 1 else 2 if n <= 3 else 3
        case Shape.CYCLE:
            if n < 3:
                raise ValueError(f'A cycle needs at least 3 vertices, got {n}.')
            return 3 if n == 3 or n % 4 == 0 else 4
        case _:
            raise ValueError(f'Unknown shape {shape}.')

def format_coloring(c: PackingColoring) -> str:
    '''Lines "vertex color".'''
    return ''.join(f'{v} {color}\n' for v, color in enumerate(c.assignment))

def parse_coloring(text: str, order: int) -> PackingColoring:
    '''
    Reads lines "vertex color" for a graph with order vertices.

    Raises:
        ValueError: on malformed lines or vertices out of range.
    '''
    assignment = [0] * order
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ValueError(f'Expected "vertex color", got {line!r}.')
        v, color = int(tokens[0]), int(tokens[1])
        if v >= order:
            raise ValueError(f'The vertex {v} is not in 0..{order - 1}.')
        assignment[v] = color
    return PackingColoring(tuple(assignment), max(assignment, default=0))
