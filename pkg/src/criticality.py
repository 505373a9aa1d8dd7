'''
Vertex-criticality and criticality for the packing chromatic number, decided by
single vertex and single edge deletions.

Every proper subgraph of G lies inside some G - v or G - e, and the packing
chromatic number never grows when passing to a subgraph, so those deletions
are the only ones that need checking.
'''
#pylint: disable=invalid-name

from dataclasses import dataclass, field
from typing import Dict

from src.graph import Edge, Graph, delete_edge, delete_vertex
from src.packing import chi_rho
from src.utilities import is_in_range

MAX_CRITICALITY_ORDER: int = 12

@dataclass(frozen=True)
class CriticalityReport:
    '''
    Packing chromatic number of a graph and of each of its single deletions.
    '''
    chi: int
    vertex_deltas: Dict[int, int] = field(default_factory=dict)
    '''Packing chromatic number of G - v for each vertex v.'''
    edge_deltas: Dict[Edge, int] = field(default_factory=dict)
    '''Packing chromatic number of G - e; empty when the edge sweep was skipped.'''
    vertex_critical: bool = False
    subgraph_critical: bool = False

    def lines(self) -> str:
        '''Machine readable lines "v <id> <delta>" and "e <u> <v> <delta>".'''
        rows = [f'chi {self.chi}']
        rows += [f'v {v} {d}' for v, d in sorted(self.vertex_deltas.items())]
        rows += [f'e {u} {v} {d}' for (u, v), d in sorted(self.edge_deltas.items())]
        rows += [f'vertex_critical {str(self.vertex_critical).lower()}',
                 f'subgraph_critical {str(self.subgraph_critical).lower()}']
        return '\n'.join(rows) + '\n'

    def table(self) -> str:
        '''Human readable summary.'''
        rows = [f'chi_rho = {self.chi}', 'deletion        chi_rho']
        rows += [f'- vertex {v:<7} {d}' for v, d in sorted(self.vertex_deltas.items())]
        rows += [f'- edge {u}-{v:<7} {d}' for (u, v), d in sorted(self.edge_deltas.items())]
        rows += [f'vertex-critical: {"yes" if self.vertex_critical else "no"}',
                 f'critical: {"yes" if self.subgraph_critical else "no"}']
        return '\n'.join(rows) + '\n'

def _chi(g: Graph) -> int:
    '''Packing chromatic number with the empty graph counted as 0.'''
    return 0 if g.order == 0 else chi_rho(g).value

def _check_order(g: Graph) -> None:
    if not is_in_range(g.order, (1, MAX_CRITICALITY_ORDER)):
        raise ValueError(f'Criticality checks support order 1..{MAX_CRITICALITY_ORDER}, got {g.order}.')

def analyze(g: Graph) -> CriticalityReport:
    '''
    Full deletion report. The edge sweep runs only when g is vertex-critical.

    Raises:
        ValueError: if g.order is outside 1..MAX_CRITICALITY_ORDER.
    '''
    _check_order(g)
    chi = _chi(g)
    vertex_deltas = {v: _chi(delete_vertex(g, v)) for v in range(g.order)}
    vertex_critical = all(d < chi for d in vertex_deltas.values())
    if not vertex_critical:
        return CriticalityReport(chi, vertex_deltas, {}, False, False)
    edge_deltas = {e: _chi(delete_edge(g, e)) for e in g.edge_list}
    subgraph_critical = all(d < chi for d in edge_deltas.values())
    return CriticalityReport(chi, vertex_deltas, edge_deltas, vertex_critical, subgraph_critical)

def is_k_vertex_critical(g: Graph, k: int) -> bool:
    '''
    True iff chi_rho(g) = k and every vertex deletion lowers it.

    Raises:
        ValueError: if g.order is outside 1..MAX_CRITICALITY_ORDER.
    '''
    _check_order(g)
    if _chi(g) != k:
        return False
    return all(_chi(delete_vertex(g, v)) < k for v in range(g.order))

def is_k_critical(g: Graph, k: int) -> bool:
    '''
    True iff chi_rho(g) = k and every proper subgraph needs fewer colors.

    Raises:
        ValueError: if g.order is outside 1..MAX_CRITICALITY_ORDER.
    '''
    if not is_k_vertex_critical(g, k):
        return False
    return all(_chi(delete_edge(g, e)) < k for e in g.edge_list)
