'''
Exhaustive desk-scale verification: enumerate every connected graph up to a
bound and compare brute force verdicts with structural ones.

Each verification returns a TheoremReport holding per-order counts and every
disagreement as a graph6 string. Work is split into chunks of graph6 strings
that may be checked in a multiprocessing pool; partial reports merge in any
order.
'''
#pylint: disable=invalid-name

import time
from dataclasses import dataclass, field
from enum import StrEnum
from functools import lru_cache, reduce
from itertools import combinations
from multiprocessing import Pool
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from src.canonical import MAX_CANONICAL_ORDER, canonical_form
from src.criticality import is_k_critical, is_k_vertex_critical
from src.data import logger
from src.families import FamilyId, Tag, Universe, classify, family_collisions, generate
from src.formats import parse_graph6, read_graph6_lines, to_graph6
from src.g3 import recognize_g3
from src.graph import (MAX_CYCLE_ORDER, Graph, apex_gadget, complete_graph, cycle_graph, cycle_spectrum, is_connected,
                       layer_edge_violations, leaf_pair_graph, normalize_edge, path_graph)
from src.packing import Shape, chi_rho, chi_rho_closed_form
from src.utilities import chunked, is_in_range, is_positive

DEFAULT_MAX_N: int = 7
MAX_ENUMERATION_ORDER: int = 9
MAX_G3_SCAN_ORDER: int = 8
MAX_FORMULA_ORDER: int = 16
MAX_FORMULA_CLIQUE: int = 8
MAX_FIXTURE_PATH: int = 12
MAX_CORPUS_ORDER: int = 12
CHUNK_SIZE: int = 64

class TheoremId(StrEnum):
    '''Verifiable statements.'''
    VC4 = 'vc4'
    '''4-vertex-critical graphs are exactly the vertex_critical universe.'''
    C4 = 'c4'
    '''4-critical graphs are exactly the critical universe.'''
    G3 = 'g3'
    '''The structural recognizer accepts exactly the graphs needing 3 colors.'''
    FORMULAS = 'formulas'
    '''Closed forms for paths, cycles and cliques; X, Y and T need 3 colors.'''
    LEMMAS = 'lemmas'
    '''Leaf-pair, apex gadget and layer-edge lemmas.'''

@dataclass
class OrderCount:
    '''Graphs scanned at one order and how many each side calls positive.'''
    scanned: int = 0
    brute: int = 0
    structural: int = 0

    def __add__(self, other: 'OrderCount') -> 'OrderCount':
        return OrderCount(self.scanned + other.scanned, self.brute + other.brute, self.structural + other.structural)

@dataclass(frozen=True, order=True)
class Mismatch:
    '''A graph on which the two verdicts differ.'''
    graph6: str
    brute: str
    structural: str

@dataclass
class TheoremReport:
    '''
    Outcome of one verification.
    '''
    theorem: str
    max_n: int
    counts: Dict[int, OrderCount] = field(default_factory=dict)
    mismatches: List[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0
    '''Wall clock seconds; the only field that differs between runs.'''
    collisions: Optional[int] = None
    '''Groups of distinct family ids generating isomorphic graphs, when the theorem scans a universe.'''

    @property
    def verified(self) -> bool:
        '''No mismatch or family collision; equal positive counts at every order.'''
        return (not self.mismatches and not self.collisions
                and all(c.brute == c.structural for c in self.counts.values()))

    @property
    def name(self) -> str:
        '''Log name.'''
        return self.theorem

    @property
    def output_headers(self) -> Tuple[str, ...]:
        '''Log header row.'''
        return ('theorem', 'order', 'scanned', 'brute', 'structural', 'mismatch')

    def rows(self) -> List[Sequence[Any]]:
        '''One row per order, then one per mismatch.'''
        rows: List[Sequence[Any]] = [(self.theorem, n, c.scanned, c.brute, c.structural, '')
                                     for n, c in sorted(self.counts.items())]
        rows += [(self.theorem, '', '', m.brute, m.structural, m.graph6) for m in self.mismatches]
        return rows

    def merge(self, other: 'TheoremReport') -> 'TheoremReport':
        '''Combines two partial reports of the same theorem.'''
        counts = dict(self.counts)
        for n, c in other.counts.items():
            counts[n] = counts.get(n, OrderCount()) + c
        return TheoremReport(self.theorem, max(self.max_n, other.max_n), counts,
                             sorted(self.mismatches + other.mismatches), self.elapsed + other.elapsed,
                             other.collisions if self.collisions is None else self.collisions)

    def summary_line(self) -> str:
        '''Machine readable one-liner.'''
        status = 'OK' if self.verified else 'FAIL'
        return f'THEOREM {self.theorem} n<={self.max_n} {status} mismatches={len(self.mismatches)}'

    def table(self) -> str:
        '''Per-order counts, mismatches and the summary line.'''
        lines = [f'{"order":>5} {"scanned":>8} {"brute":>6} {"struct":>6}']
        lines += [f'{n:>5} {c.scanned:>8} {c.brute:>6} {c.structural:>6}' for n, c in sorted(self.counts.items())]
        lines += [f'mismatch {m.graph6} brute={m.brute} structural={m.structural}' for m in self.mismatches]
        if self.collisions is not None:
            lines.append(f'collisions {self.collisions}')
        lines.append(f'elapsed {self.elapsed:.2f}s')
        lines.append(self.summary_line())
        return '\n'.join(lines) + '\n'

@lru_cache(maxsize=None)
def _connected_by_edge_addition(n: int) -> Tuple[Graph, ...]:
    level: Dict[bytes, Graph] = {canonical_form(Graph(n)).certificate: Graph(n)}
    connected: List[Graph] = [g for g in level.values() if is_connected(g)]
    for _ in range(n * (n - 1) // 2):
        following: Dict[bytes, Graph] = {}
        for g in level.values():
            for u, v in combinations(range(n), 2):
                if g.has_edge(u, v):
                    continue
                form = canonical_form(Graph(n, g.edges | {(u, v)}))
                if form.certificate not in following:
                    following[form.certificate] = Graph(n, form.edges)
        connected += [g for g in following.values() if is_connected(g)]
        level = following
    return tuple(sorted(connected, key=lambda g: (g.size, to_graph6(g))))

def read_corpus(path: str) -> List[Graph]:
    '''Graphs of a graph6 file; blank lines and '#' comments are skipped.'''
    with open(path, 'r', encoding='utf-8') as corpus:
        return [g for _, g in read_graph6_lines(corpus.read())]

def enumerate_connected(n: int, corpus: Optional[str] = None) -> Iterator[Graph]:
    '''
    One representative per isomorphism class of connected graphs on n vertices.

    Without a corpus the classes are built by adding edges one at a time to
    the edgeless graph and keeping one graph per canonical form.

    Raises:
        ValueError: if n is outside 1..MAX_ENUMERATION_ORDER and no corpus is given.
    '''
    if corpus is not None:
        yield from (g for g in read_corpus(corpus) if g.order == n and is_connected(g))
        return
    if not is_in_range(n, (1, MAX_ENUMERATION_ORDER)):
        raise ValueError(f'Enumeration supports n in 1..{MAX_ENUMERATION_ORDER}, got {n}; provide a corpus file.')
    yield from _connected_by_edge_addition(n)

def count_connected_by_edge_subsets(n: int) -> int:
    '''Connected classes on n vertices counted over every labeled edge subset.'''
    pairs = list(combinations(range(n), 2))
    certificates = set()
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        if is_connected(g):
            certificates.add(canonical_form.__wrapped__(g).certificate)
    return len(certificates)

@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> Tuple[Graph, ...]:
    '''One representative per isomorphism class of trees on n vertices (grown leaf by leaf).'''
    if not is_positive(n):
        raise ValueError(f'The order: {n} must be positive.')
    if n == 1:
        return (Graph(1),)
    grown: Dict[bytes, Graph] = {}
    for tree in enumerate_trees(n - 1):
        for v in range(tree.order):
            form = canonical_form(Graph(n, tree.edges | {normalize_edge(v, n - 1)}))
            grown.setdefault(form.certificate, Graph(n, form.edges))
    return tuple(sorted(grown.values(), key=to_graph6))

def _verdicts(theorem: TheoremId, g: Graph) -> Tuple[bool, bool]:
    match theorem:
        case TheoremId.VC4:
            return is_k_vertex_critical(g, 4), bool(classify(g, Universe.VERTEX_CRITICAL).matches)
        case TheoremId.C4:
            return is_k_critical(g, 4), bool(classify(g, Universe.CRITICAL).matches)
        case TheoremId.G3:
            return chi_rho(g).value == 3, recognize_g3(g) is not None
        case TheoremId.LEMMAS:
            premise = not any(m >= 4 and m % 4 != 0 for m in cycle_spectrum(g))
            return premise, premise and not layer_edge_violations(g)
        case _:
            raise ValueError(f'{theorem} is not checked graph by graph.')

def _check_batch(job: Tuple[str, int, Sequence[str]]) -> TheoremReport:
    '''Checks one chunk of graph6 strings; runs inside pool workers.'''
    theorem, max_n, lines = job
    report = TheoremReport(theorem, max_n)
    for line in lines:
        g = parse_graph6(line)
        brute, structural = _verdicts(TheoremId(theorem), g)
        count = report.counts.setdefault(g.order, OrderCount())
        count.scanned += 1
        count.brute += brute
        count.structural += structural
        if brute != structural:
            report.mismatches.append(Mismatch(line, str(brute).lower(), str(structural).lower()))
    return report

def _scan(theorem: TheoremId, max_n: int, corpus: Optional[str], jobs: int, limit: int) -> TheoremReport:
    if not is_positive(jobs):
        raise ValueError(f'The number of jobs: {jobs} must be positive.')
    if corpus is None and not is_in_range(max_n, (1, limit)):
        raise ValueError(f'{theorem} supports max_n in 1..{limit} without a corpus, got {max_n}.')
    start = time.perf_counter()
    orders = range(1, min(max_n, MAX_CORPUS_ORDER) + 1)
    lines = [to_graph6(g) for n in orders for g in enumerate_connected(n, corpus)]
    jobs_list = [(str(theorem), max_n, chunk) for chunk in chunked(lines, CHUNK_SIZE)]
    if jobs > 1 and len(jobs_list) > 1:
        with Pool(jobs) as pool:
            partials = pool.map(_check_batch, jobs_list)
    else:
        partials = [_check_batch(job) for job in jobs_list]
    empty = TheoremReport(str(theorem), max_n, {n: OrderCount() for n in orders})
    report = reduce(TheoremReport.merge, partials, empty)
    report.elapsed = time.perf_counter() - start
    return report

@logger
def verify_vertex_critical_theorem(max_n: int = DEFAULT_MAX_N, corpus: Optional[str] = None, jobs: int = 1) -> TheoremReport:
    '''
    For every connected graph with at most max_n vertices, compares
    is_k_vertex_critical(g, 4) with membership in the vertex_critical universe,
    and counts family ids of the universe that generate isomorphic graphs.

    Raises:
        ValueError: if max_n exceeds MAX_ENUMERATION_ORDER without a corpus.
    '''
    report = _scan(TheoremId.VC4, max_n, corpus, jobs, MAX_ENUMERATION_ORDER)
    report.collisions = len(family_collisions(Universe.VERTEX_CRITICAL, min(max_n, MAX_CANONICAL_ORDER)))
    return report

@logger
def verify_critical_theorem(max_n: int = DEFAULT_MAX_N, corpus: Optional[str] = None, jobs: int = 1) -> TheoremReport:
    '''As verify_vertex_critical_theorem with is_k_critical(g, 4) and the critical universe.'''
    report = _scan(TheoremId.C4, max_n, corpus, jobs, MAX_ENUMERATION_ORDER)
    report.collisions = len(family_collisions(Universe.CRITICAL, min(max_n, MAX_CANONICAL_ORDER)))
    return report

@logger
def verify_g3_recognizer(max_n: int = DEFAULT_MAX_N, corpus: Optional[str] = None, jobs: int = 1) -> TheoremReport:
    '''Compares recognize_g3 with chi_rho = 3 on every connected graph up to max_n vertices.'''
    return _scan(TheoremId.G3, max_n, corpus, jobs, MAX_G3_SCAN_ORDER)

def _record(report: TheoremReport, g: Graph, computed: int, expected: int, what: str) -> None:
    '''brute counts agreeing checks, structural counts checks made.'''
    count = report.counts.setdefault(g.order, OrderCount())
    count.scanned += 1
    count.structural += 1
    if computed == expected:
        count.brute += 1
    else:
        report.mismatches.append(Mismatch(to_graph6(g), f'{what}:chi={computed}', f'{what}:expected={expected}'))

@logger
def verify_formula_tables(max_n: int = MAX_FORMULA_ORDER) -> TheoremReport:
    '''
    chi_rho against the closed forms on P_n and C_n (n <= max_n) and K_n
    (n <= 8), and against 3 on X(n), Y(n) (n <= 12) and T.

    Raises:
        ValueError: if max_n is outside 1..MAX_FORMULA_ORDER.
    '''
    if not is_in_range(max_n, (1, MAX_FORMULA_ORDER)):
        raise ValueError(f'Formula tables support max_n in 1..{MAX_FORMULA_ORDER}, got {max_n}.')
    start = time.perf_counter()
    report = TheoremReport(str(TheoremId.FORMULAS), max_n)
    for n in range(1, max_n + 1):
        _record(report, path_graph(n), chi_rho(path_graph(n)).value, chi_rho_closed_form(Shape.PATH, n), f'P{n}')
        if n >= 3:
            _record(report, cycle_graph(n), chi_rho(cycle_graph(n)).value, chi_rho_closed_form(Shape.CYCLE, n), f'C{n}')
        if n <= MAX_FORMULA_CLIQUE:
            _record(report, complete_graph(n), chi_rho(complete_graph(n)).value, chi_rho_closed_form(Shape.CLIQUE, n), f'K{n}')
    fixtures = [FamilyId(tag, n=n) for tag in (Tag.X, Tag.Y) for n in range(1, MAX_FIXTURE_PATH + 1)]
    for fid in fixtures + [FamilyId(Tag.T)]:
        g = generate(fid)
        _record(report, g, chi_rho(g).value, 3, str(fid))
    report.mismatches.sort()
    report.elapsed = time.perf_counter() - start
    return report

@logger
def verify_lemmas(max_n: int = DEFAULT_MAX_N, corpus: Optional[str] = None, jobs: int = 1) -> TheoremReport:
    '''
    Leaf-pair lemma (C_n with leaves at odd distance needs 4 colors) and apex
    gadget lemma (C_n with an apex on an edge has a cycle of length >= 5 not
    divisible by 4) for n in 4..max(10, max_n), capped so the gadget stays
    within MAX_CYCLE_ORDER vertices, plus the layer-edge lemma on every
    connected graph up to max_n vertices.
    '''
    report = _scan(TheoremId.LEMMAS, max_n, corpus, jobs, MAX_ENUMERATION_ORDER)
    start = time.perf_counter()
    for n in range(4, min(max(10, max_n), MAX_CYCLE_ORDER - 1) + 1):
        for d in range(1, n // 2 + 1, 2):
            g = leaf_pair_graph(n, d)
            _record(report, g, min(chi_rho(g).value, 4), 4, f'leaf-pair C{n} d={d}')
        gadget = apex_gadget(n)
        found = any(m >= 5 and m % 4 != 0 for m in cycle_spectrum(gadget))
        _record(report, gadget, int(found), 1, f'apex C{n}')
    report.mismatches.sort()
    report.elapsed += time.perf_counter() - start
    return report

def run_theorem(theorem: TheoremId, max_n: Optional[int] = None, corpus: Optional[str] = None, jobs: int = 1) -> TheoremReport:
    '''Dispatches to the verification named by theorem.'''
    match TheoremId(theorem):
        case TheoremId.VC4:
            return verify_vertex_critical_theorem(DEFAULT_MAX_N if max_n is None else max_n, corpus, jobs)
        case TheoremId.C4:
            return verify_critical_theorem(DEFAULT_MAX_N if max_n is None else max_n, corpus, jobs)
        case TheoremId.G3:
            return verify_g3_recognizer(DEFAULT_MAX_N if max_n is None else max_n, corpus, jobs)
        case TheoremId.FORMULAS:
            return verify_formula_tables(MAX_FORMULA_ORDER if max_n is None else max_n)
        case TheoremId.LEMMAS:
            return verify_lemmas(DEFAULT_MAX_N if max_n is None else max_n, corpus, jobs)
        case _:
            raise ValueError(f'Unknown theorem {theorem}.')
