'''
Generators and recognizers for the named graphs and the infinite families
whose union is the class of 4-vertex-critical (and, restricted, 4-critical)
graphs for the packing chromatic number.

Vertex labels follow the letters of the family drawings: u, u1.., v, v1..,
x1.. for subdivision paths, y1.. and w1.. for the two paths of F4, z, z1, z2.
'''
#pylint: disable=invalid-name
#pylint: disable=line-too-long

import re
from dataclasses import dataclass, field, replace
from enum import StrEnum
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from src.canonical import MAX_CANONICAL_ORDER, canonical_form, isomorphism
from src.graph import Graph, delete_edge, delete_vertex
from src.packing import PackingColoring
from src.utilities import is_in_range, is_residue, repeating_pattern

MAX_LIST_ORDER: int = 20

class Tag(StrEnum):
    '''Names of the graphs and families.'''
    K4 = 'K4'
    H1 = 'H1'
    H2 = 'H2'
    H3 = 'H3'
    H4 = 'H4'
    H5 = 'H5'
    H6 = 'H6'
    H7 = 'H7'
    H8 = 'H8'
    H9 = 'H9'
    CYC = 'C'
    C5VAR = 'C5var'
    C6VAR = 'C6var'
    X = 'X'
    Y = 'Y'
    T = 'T'
    F1 = 'F1'
    F2 = 'F2'
    F3 = 'F3'
    F4 = 'F4'
    F5 = 'F5'

class End(StrEnum):
    '''Shape of a P4 end gadget, optionally closed into C4.'''
    P4 = 'P4'
    C4 = 'C4'

class Extra(StrEnum):
    '''Optional extra edge of F4.'''
    NONE = 'none'
    V1_Y_PREV = 'v1_y_prev'
    V1_W2 = 'v1_w2'

class Universe(StrEnum):
    '''Family unions characterizing the two criticality notions for 4 colors.'''
    VERTEX_CRITICAL = 'vertex_critical'
    CRITICAL = 'critical'

NAMED_EDGES: Dict[Tag, str] = {
    Tag.K4: 'ab ac ad bc bd cd',
    Tag.H1: 'ab bc ae ed db ad',
    Tag.H2: 'ab bc cd db be ea',
    Tag.H3: 'da ab be ac cb cf',
    Tag.H4: 'ab bc cd de ef cg gd',
    Tag.H5: 'fc cd da ab be bc',
    Tag.H6: 'be ed da ab bf ac ce',
    Tag.H7: 'ab bc cd de ef eg gh hi ij jb',
    Tag.H8: 'ab bc cd de ef eg gh hi ij jb ai',
    Tag.H9: 'ab bc cd de bf cg dh',
}
'''Edge lists of the single graphs, one pair of vertex letters per edge.'''

C5_CHORDS: Dict[int, Tuple[Tuple[int, int], ...]] = {
    1: ((2, 4),),
    2: ((2, 4), (1, 3)),
    3: ((2, 4), (4, 1)),
    4: ((2, 4), (4, 1), (3, 5)),
}
C6_CHORDS: Dict[int, Tuple[Tuple[int, int], ...]] = {
    1: ((3, 6),),
    2: ((3, 6), (2, 5)),
    3: ((3, 6), (2, 5), (1, 4)),
}

CRITICAL_NAMED: Tuple[Tag, ...] = (Tag.K4, Tag.H1, Tag.H2, Tag.H3, Tag.H4, Tag.H5, Tag.H9)
VERTEX_CRITICAL_NAMED: Tuple[Tag, ...] = (Tag.K4, Tag.H1, Tag.H2, Tag.H3, Tag.H4, Tag.H5, Tag.H6, Tag.H7, Tag.H8, Tag.H9)

@dataclass(frozen=True)
class FamilyId:
    '''
    A graph or family member with its parameters; unused parameters keep their defaults.
    '''
    tag: Tag
    n: int = 0
    '''Order of a cycle, path length of X and Y, or the index of a C5/C6 variant.'''
    l: int = 0
    '''Number of subdivision vertices on the main path of F1..F5.'''
    l_prime: int = 0
    '''Number of subdivision vertices on the path vz of F4.'''
    a: End = End.P4
    b: End = End.P4
    extra: Extra = Extra.NONE

    def __str__(self) -> str:
        match self.tag:
            case Tag.CYC | Tag.C5VAR | Tag.C6VAR | Tag.X | Tag.Y:
                return f'{self.tag}({self.n})'
            case Tag.F1 | Tag.F2:
                return f'{self.tag}(l={self.l})'
            case Tag.F3:
                return f'{self.tag}(l={self.l},a={self.a})'
            case Tag.F4:
                return f"{self.tag}(l={self.l},l'={self.l_prime},extra={self.extra})"
            case Tag.F5:
                return f'{self.tag}(l={self.l},a={self.a},b={self.b})'
            case _:
                return str(self.tag)

    def normalized(self) -> 'FamilyId':
        '''F5 is symmetric in its ends; (C4, P4) is reported as (P4, C4).'''
        if self.tag == Tag.F5 and (self.a, self.b) == (End.C4, End.P4):
            return replace(self, a=End.P4, b=End.C4)
        return self

@dataclass(frozen=True)
class Match:
    '''A family member isomorphic to the input, with the vertex map onto the generated graph.'''
    family: FamilyId
    mapping: Dict[int, int] = field(compare=False)

@dataclass(frozen=True)
class ClassificationResult:
    '''All memberships found within one universe.'''
    matches: Tuple[Match, ...] = ()

    @property
    def families(self) -> List[FamilyId]:
        '''The matching identifiers.'''
        return [m.family for m in self.matches]

class _Builder:
    '''Accumulates named vertices and edges in insertion order.'''
    def __init__(self) -> None:
        self.names: List[str] = []
        self.edges: List[Tuple[int, int]] = []

    def _id(self, name: str) -> int:
        if name not in self.names:
            self.names.append(name)
        return self.names.index(name)

    def path(self, *names: str) -> '_Builder':
        '''Adds the vertices and the edges between consecutive names.'''
        ids = [self._id(name) for name in names]
        self.edges.extend(zip(ids, ids[1:]))
        return self

    def cycle(self, *names: str) -> '_Builder':
        '''Adds the path and closes it.'''
        return self.path(*names, names[0])

    def build(self) -> Graph:
        '''The labeled graph.'''
        return Graph.from_edges(len(self.names), self.edges, self.names)

def _labels(prefix: str, count: int) -> List[str]:
    return [f'{prefix}{i}' for i in range(1, count + 1)]

def family_order(fid: FamilyId) -> int:
    '''Number of vertices of the generated graph.'''
    match fid.tag:
        case Tag.CYC:
            return fid.n
        case Tag.C5VAR:
            return 5
        case Tag.C6VAR | Tag.T:
            return 6
        case Tag.X:
            return fid.n + 3
        case Tag.Y:
            return fid.n + 4
        case Tag.F1 | Tag.F2:
            return fid.l + 6
        case Tag.F3:
            return fid.l + 7
        case Tag.F4:
            return fid.l + fid.l_prime + 8
        case Tag.F5:
            return fid.l + 8
        case _:
            return len(set(NAMED_EDGES[fid.tag].replace(' ', '')))

def is_legal(fid: FamilyId) -> bool:
    '''Parameter legality of each family.'''
    match fid.tag:
        case Tag.CYC:
            return fid.n >= 5 and fid.n % 4 != 0
        case Tag.C5VAR:
            return fid.n in C5_CHORDS
        case Tag.C6VAR:
            return fid.n in C6_CHORDS
        case Tag.X | Tag.Y:
            return fid.n >= 1
        case Tag.F1:
            return fid.l >= 0 and is_residue(fid.l, 4, (0, 1, 2))
        case Tag.F2:
            return fid.l == 0 or (fid.l > 0 and is_residue(fid.l, 4, (2,)))
        case Tag.F3:
            return fid.l >= 4 and is_residue(fid.l, 4, (0,))
        case Tag.F4:
            if fid.l < 0 or fid.l_prime < 0 or not is_residue(fid.l, 4, (2,)) or not is_residue(fid.l_prime, 4, (0,)):
                return False
            return fid.extra != Extra.V1_W2 or fid.l_prime >= 2
        case Tag.F5:
            return fid.l >= 0 and fid.l % 2 == 0
        case _:
            return True

def _end(builder: _Builder, hub: str, a: str, b: str, c: str, shape: End) -> None:
    '''P4 a-b-hub-c, plus the edge ac when closed into C4.'''
    builder.path(a, b, hub, c)
    if shape == End.C4:
        builder.path(a, c)

@lru_cache(maxsize=None)
def generate(fid: FamilyId) -> Graph:
    '''
    The labeled graph of fid.

    Raises:
        ValueError: if the parameters are illegal for the family.
    '''
    if not is_legal(fid):
        raise ValueError(f'Illegal parameters for {fid}.')
    builder = _Builder()
    x = _labels('x', fid.l)
    match fid.tag:
        case Tag.CYC:
            builder.cycle(*_labels('x', fid.n))
        case Tag.C5VAR | Tag.C6VAR:
            size, chords = (5, C5_CHORDS) if fid.tag == Tag.C5VAR else (6, C6_CHORDS)
            builder.cycle(*_labels('a', size))
            for i, j in chords[fid.n]:
                builder.path(f'a{i}', f'a{j}')
        case Tag.X:
            builder.cycle('a', 'b', 'c').path('c', *_labels('x', fid.n))
        case Tag.Y:
            builder.cycle('a', 'b', 'c', 'd').path('d', *_labels('x', fid.n))
        case Tag.T:
            builder.path('d', 'b', "y'", 'c', 'e').path('a', "y'")
        case Tag.F1:
            builder.cycle('u', 'u1', 'u2').path('u', *x, 'v').cycle('v', 'v1', 'v2')
        case Tag.F2:
            builder.cycle('u', 'u1', 'u2').path('u', *x, 'v').path('v1', 'v', 'v2')
        case Tag.F3:
            _end(builder, 'u', 'u2', 'u1', 'u3', fid.a)
            builder.path('u', *x, 'v').cycle('v', 'v1', 'v2')
        case Tag.F4:
            y, w = _labels('y', fid.l), _labels('w', fid.l_prime)
            builder.path('u1', 'u', 'u2').path('u', *y, 'v').path('v', 'v1').path('v', *w, 'z').path('z1', 'z', 'z2')
            if fid.extra == Extra.V1_Y_PREV:
                builder.path('v1', y[-2])
            elif fid.extra == Extra.V1_W2:
                builder.path('v1', 'w2')
        case Tag.F5:
            _end(builder, 'u', 'u2', 'u1', 'u3', fid.a)
            builder.path('u', *x, 'v')
            _end(builder, 'v', 'v2', 'v1', 'v3', fid.b)
        case _:
            for pair in NAMED_EDGES[fid.tag].split():
                builder.path(pair[0], pair[1])
    return builder.build()

def in_universe(fid: FamilyId, universe: Universe) -> bool:
    '''Membership of a legal identifier in a universe.'''
    if not is_legal(fid):
        return False
    critical = Universe(universe) == Universe.CRITICAL
    match fid.tag:
        case Tag.CYC | Tag.F2:
            return True
        case Tag.C5VAR | Tag.C6VAR:
            return not critical
        case Tag.X | Tag.Y | Tag.T:
            return False
        case Tag.F1:
            return not critical or not (fid.l == 0 or is_residue(fid.l, 4, (2,)))
        case Tag.F3:
            return not critical or fid.a == End.P4
        case Tag.F4:
            return not critical or fid.extra == Extra.NONE
        case Tag.F5:
            return fid == fid.normalized() and (not critical or (fid.a, fid.b) == (End.P4, End.P4))
        case _:
            return fid.tag in (CRITICAL_NAMED if critical else VERTEX_CRITICAL_NAMED)

def members(universe: Universe, max_order: int) -> Iterator[FamilyId]:
    '''Every identifier of the universe whose graph has at most max_order vertices.'''
    candidates: List[FamilyId] = [FamilyId(tag) for tag in VERTEX_CRITICAL_NAMED]
    candidates += [FamilyId(Tag.C5VAR, n=i) for i in C5_CHORDS]
    candidates += [FamilyId(Tag.C6VAR, n=i) for i in C6_CHORDS]
    candidates += [FamilyId(Tag.CYC, n=n) for n in range(5, max_order + 1)]
    for l in range(max_order + 1):
        candidates += [FamilyId(Tag.F1, l=l), FamilyId(Tag.F2, l=l)]
        candidates += [FamilyId(Tag.F3, l=l, a=a) for a in End]
        candidates += [FamilyId(Tag.F5, l=l, a=a, b=b) for a in End for b in End]
        candidates += [FamilyId(Tag.F4, l=l, l_prime=lp, extra=e) for lp in range(max_order + 1) for e in Extra]
    for fid in candidates:
        if in_universe(fid, universe) and family_order(fid) <= max_order:
            yield fid

@lru_cache(maxsize=None)
def candidates_for_order(universe: Universe, n: int) -> Tuple[FamilyId, ...]:
    '''Identifiers of the universe with exactly n vertices.'''
    return tuple(fid for fid in members(universe, n) if family_order(fid) == n)

def classify(g: Graph, universe: Universe) -> ClassificationResult:
    '''
    All members of universe isomorphic to g.

    Raises:
        ValueError: if g.order > MAX_CANONICAL_ORDER.
    '''
    if g.order > MAX_CANONICAL_ORDER:
        raise ValueError(f'Classification supports order <= {MAX_CANONICAL_ORDER}, got {g.order}.')
    matches = []
    for fid in candidates_for_order(universe, g.order):
        mapping = isomorphism(g, generate(fid))
        if mapping is not None:
            matches.append(Match(fid, mapping))
    return ClassificationResult(tuple(matches))

def list_members(universe: Universe, max_order: int) -> Iterator[Tuple[FamilyId, Graph]]:
    '''
    Members with at most max_order vertices, one per isomorphism class.

    Graphs beyond MAX_CANONICAL_ORDER are deduplicated by identifier only.

    Raises:
        ValueError: if max_order > MAX_LIST_ORDER.
    '''
    if not is_in_range(max_order, (0, MAX_LIST_ORDER)):
        raise ValueError(f'max_order must lie in 0..{MAX_LIST_ORDER}, got {max_order}.')
    seen = set()
    for fid in sorted(members(universe, max_order), key=lambda f: (family_order(f), str(f))):
        g = generate(fid)
        key = canonical_form(g).certificate if g.order <= MAX_CANONICAL_ORDER else fid
        if key not in seen:
            seen.add(key)
            yield fid, g

def family_collisions(universe: Universe, max_order: int) -> List[List[FamilyId]]:
    '''Groups of distinct identifiers whose graphs are isomorphic.'''
    if max_order > MAX_CANONICAL_ORDER:
        raise ValueError(f'Collision scans support max_order <= {MAX_CANONICAL_ORDER}, got {max_order}.')
    groups: Dict[bytes, List[FamilyId]] = {}
    for fid in members(universe, max_order):
        groups.setdefault(canonical_form(generate(fid)).certificate, []).append(fid)
    return [group for group in groups.values() if len(group) > 1]

_ID_PATTERN = re.compile(r'^\s*([A-Za-z][A-Za-z0-9]*)\s*(?:\((.*)\))?\s*$')
_ALIASES: Dict[str, Tag] = {'net': Tag.H3, 'Cyc': Tag.CYC, 'Tgraph': Tag.T}

def parse_family_id(text: str) -> FamilyId:
    '''
    Reads the text form, e.g. "F1(l=5)", "H7", "net", "C(9)", "C5var(2)",
    "F5(l=2,a=C4,b=P4)" or "F4(l=2,l'=4,extra=none)".

    Raises:
        ValueError: on unknown names, malformed parameters or illegal values.
    '''
    found = _ID_PATTERN.match(text)
    if found is None:
        raise ValueError(f'Malformed family identifier {text!r}.')
    name, body = found.group(1), found.group(2)
    if name in _ALIASES:
        tag = _ALIASES[name]
    else:
        try:
            tag = Tag(name)
        except ValueError as err:
            raise ValueError(f'Unknown family {name!r}.') from err
    params: Dict[str, str] = {}
    positional = {Tag.CYC: 'n', Tag.C5VAR: 'n', Tag.C6VAR: 'n', Tag.X: 'n', Tag.Y: 'n'}.get(tag, 'l')
    for item in ([] if not body or not body.strip() else body.split(',')):
        key, _, value = item.partition('=')
        key, value = (key.strip(), value.strip()) if value else (positional, key.strip())
        params[key] = value
    fields = {'n': 'n', 'l': 'l', "l'": 'l_prime', 'l_prime': 'l_prime', 'a': 'a', 'b': 'b', 'extra': 'extra'}
    kwargs = {}
    try:
        for key, value in params.items():
            if key not in fields:
                raise ValueError(f'Unknown parameter {key!r} in {text!r}.')
            attribute = fields[key]
            match attribute:
                case 'a' | 'b':
                    kwargs[attribute] = End(value)
                case 'extra':
                    kwargs[attribute] = Extra(value)
                case _:
                    kwargs[attribute] = int(value)
    except ValueError as err:
        raise ValueError(f'Malformed parameters in {text!r}: {err}') from err
    fid = FamilyId(tag, **kwargs)
    if not is_legal(fid):
        raise ValueError(f'Illegal parameters for {fid}.')
    return fid.normalized()

NAMED_COLORINGS: Dict[Tag, Dict[str, int]] = {
    Tag.T: {"y'": 3, 'a': 1, 'b': 1, 'c': 1, 'd': 2, 'e': 2},
    Tag.H1: {'a': 1, 'c': 1, 'b': 2, 'd': 3, 'e': 4},
    Tag.H2: {'a': 1, 'c': 1, 'b': 2, 'd': 3, 'e': 4},
    Tag.H4: {'a': 1, 'b': 2, 'c': 1, 'd': 3, 'e': 1, 'f': 2, 'g': 4},
    Tag.H6: {'b': 1, 'c': 1, 'd': 1, 'a': 2, 'e': 3, 'f': 4},
    Tag.H8: {'d': 2, 'i': 2, 'b': 3, 'g': 3, 'f': 4, 'a': 1, 'c': 1, 'e': 1, 'h': 1, 'j': 1},
    Tag.H9: {'a': 1, 'e': 1, 'f': 1, 'g': 1, 'h': 1, 'b': 2, 'c': 3, 'd': 4},
}
'''Colorings used in the arguments that these graphs are 4-vertex-critical or that T needs 3 colors.'''

PATH_PATTERN: Tuple[int, ...] = (1, 2, 1, 3)

def _path_colors(prefix: str, count: int, pattern: Sequence[int]) -> Dict[str, int]:
    return dict(zip(_labels(prefix, count), repeating_pattern(pattern, count)))

def witness_coloring(fid: FamilyId) -> PackingColoring:
    '''
    An explicit packing coloring of generate(fid): 3 colors for X, Y and T, 4 for
    the named graphs with a recorded coloring and for every member of F1, F4, F5.

    Raises:
        ValueError: if no coloring is recorded for fid.
    '''
    g = generate(fid)
    match fid.tag:
        case Tag.X:
            colors = {'c': 3, 'a': 1, 'b': 2} | _path_colors('x', fid.n, PATH_PATTERN)
        case Tag.Y:
            colors = {'d': 3, 'a': 1, 'c': 1, 'b': 2} | _path_colors('x', fid.n, PATH_PATTERN)
        case Tag.F1:
            colors = {'u': 3, 'u1': 1, 'v1': 1, 'u2': 2, 'v': 4, 'v2': 2 if is_residue(fid.l, 4, (0, 1)) else 3}
            colors |= _path_colors('x', fid.l, PATH_PATTERN)
        case Tag.F4:
            colors = {'u1': 1, 'u2': 1, 'v1': 1, 'z1': 1, 'z2': 1, 'u': 2, 'v': 2, 'z': 4}
            colors |= _path_colors('y', fid.l, (3, 1, 2, 1)) | _path_colors('w', fid.l_prime, (1, 3, 1, 2))
        case Tag.F5:
            colors = {'u1': 1, 'u3': 1, 'v1': 1, 'v3': 1, 'u2': 2, 'v2': 2, 'u': 3, 'v': 4}
            colors |= _path_colors('x', fid.l, PATH_PATTERN)
        case tag if tag in NAMED_COLORINGS:
            colors = NAMED_COLORINGS[tag]
        case _:
            raise ValueError(f'No coloring is recorded for {fid}.')
    return PackingColoring.from_labels(g, colors)

def deletion_fixtures() -> List[Tuple[str, Graph, PackingColoring]]:
    '''
    3-packing colorings of H4 - cg and H9 - a, showing those deletions lower
    the packing chromatic number.
    '''
    h4 = generate(FamilyId(Tag.H4))
    h4_cg = delete_edge(h4, (h4.vertex('c'), h4.vertex('g')))
    h9 = generate(FamilyId(Tag.H9))
    h9_a = delete_vertex(h9, h9.vertex('a'))
    return [
        ('H4-cg', h4_cg, PackingColoring.from_labels(h4_cg, {'a': 1, 'c': 1, 'e': 1, 'g': 1, 'b': 2, 'f': 2, 'd': 3})),
        ('H9-a', h9_a, PackingColoring.from_labels(h9_a, {'b': 1, 'e': 1, 'g': 1, 'h': 1, 'f': 2, 'd': 2, 'c': 3})),
    ]
