'''
Text formats for graphs: graph6, edge lists and DOT.
'''
from typing import Iterator, List, Optional, Sequence, Set, Tuple

import graphviz
import networkx as nx

from src.graph import Graph, normalize_edge

MAX_GRAPH6_ORDER: int = 62
GRAPH6_HEADER: str = '>>graph6<<'

PALETTE: Tuple[str, ...] = ('lightgrey', 'lightblue', 'palegreen', 'gold', 'salmon', 'plum', 'orange', 'cyan')
'''Fill colors for packing colors 1, 2, ...; reused cyclically.'''

def to_graph6(g: Graph) -> str:
    '''
    Encodes g in graph6 (upper triangle, column by column).

    Raises:
        ValueError: if g.order > 62.
    '''
    if g.order > MAX_GRAPH6_ORDER:
        raise ValueError(f'graph6 encoding supports order <= {MAX_GRAPH6_ORDER}, got {g.order}.')
    return nx.to_graph6_bytes(g.nx, header=False).decode('ascii').strip()

def parse_graph6(line: str) -> Graph:
    '''
    Decodes one graph6 string.

    Raises:
        ValueError: on a malformed size byte, a truncated or overlong bit vector,
            characters outside '?'..'~', or order > 62.
    '''
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise ValueError('Empty graph6 string.')
    n = ord(text[0]) - 63
    if n == 63:
        raise ValueError(f'graph6 decoding supports order <= {MAX_GRAPH6_ORDER}.')
    if not 0 <= n <= MAX_GRAPH6_ORDER:
        raise ValueError(f'Malformed graph6 size byte: {text[0]!r}.')
    bad = [char for char in text[1:] if not 0 <= ord(char) - 63 <= 63]
    if bad:
        raise ValueError(f'Malformed graph6 data byte: {bad[0]!r}.')
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(text) - 1 != expected:
        raise ValueError(f'graph6 string {text!r} has {len(text) - 1} data bytes, expected {expected}.')
    decoded = nx.from_graph6_bytes(text.encode('ascii'))
    return Graph(n, frozenset(normalize_edge(u, v) for u, v in decoded.edges()))

def read_graph6_lines(text: str) -> Iterator[Tuple[str, Graph]]:
    '''
    Yields (graph6, graph) for every graph line; blank lines, lines starting
    with '#' and trailing '# ...' comments are ignored.
    '''
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            yield line, parse_graph6(line)

def parse_edge_list(text: str) -> Graph:
    '''
    Reads lines "u v", optionally preceded by "n <order>".

    Raises:
        ValueError: on loops, duplicate edges, negative or non-integer tokens,
            or an endpoint beyond the declared order.
    '''
    order: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    lines = [line.split('#', 1)[0].split() for line in text.splitlines()]
    lines = [tokens for tokens in lines if tokens]
    for number, tokens in enumerate(lines):
        if tokens[0] == 'n' and number == 0:
            if len(tokens) != 2:
                raise ValueError(f'Malformed order line: {" ".join(tokens)!r}.')
            order = _vertex_id(tokens[1])
            continue
        if len(tokens) != 2:
            raise ValueError(f'Expected "u v", got {" ".join(tokens)!r}.')
        u, v = _vertex_id(tokens[0]), _vertex_id(tokens[1])
        if u == v:
            raise ValueError(f'The edge ({u}, {v}) is a loop.')
        edge = normalize_edge(u, v)
        if edge in seen:
            raise ValueError(f'The edge ({u}, {v}) appears more than once.')
        seen.add(edge)
        edges.append(edge)
    largest = max((max(e) for e in edges), default=-1)
    if order is None:
        order = largest + 1
    elif largest >= order:
        raise ValueError(f'The vertex {largest} exceeds the declared order {order}.')
    return Graph.from_edges(order, edges)

def _vertex_id(token: str) -> int:
    try:
        value = int(token)
    except ValueError as err:
        raise ValueError(f'The token {token!r} is not an integer.') from err
    if value < 0:
        raise ValueError(f'The vertex id {value} is negative.')
    return value

def to_edge_list(g: Graph) -> str:
    '''Inverse of parse_edge_list (always writes the order line).'''
    lines = [f'n {g.order}'] + [f'{u} {v}' for u, v in g.edge_list]
    return '\n'.join(lines) + '\n'

def to_dot(g: Graph, colors: Optional[Sequence[int]] = None, name: str = 'G') -> str:
    '''
    DOT source for g; colors[v], when given, is shown in the label and as fill.
    '''
    dot = graphviz.Graph(name=name, strict=True)
    for v in range(g.order):
        if colors is None:
            dot.node(str(v), label=g.label(v))
        else:
            c = colors[v]
            dot.node(str(v), label=f'{g.label(v)}:{c}', style='filled',
                     fillcolor=PALETTE[(c - 1) % len(PALETTE)])
    for u, v in g.edge_list:
        dot.edge(str(u), str(v))
    return dot.source
