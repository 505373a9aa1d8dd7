'''
Command line interface: pcolor <command> [input] [options].

Exit status 0 on success, 1 when a verification finds a mismatch, 2 on usage
or input errors.
'''
import argparse
import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import List, Optional, Sequence, TextIO, Tuple

from src.criticality import analyze
from src.data import flush_registry
from src.families import Universe, classify, generate, list_members, parse_family_id
from src.formats import parse_edge_list, read_graph6_lines, parse_graph6, to_dot, to_graph6
from src.g3 import recognize_g3
from src.graph import Graph
from src.harness import TheoremId, run_theorem
from src.packing import chi_rho, find_k_packing_coloring, format_coloring

JOBS_VARIABLE: str = 'PCOLOR_JOBS'
DEFAULT_LIST_ORDER: int = 10

UNIVERSES = {
    'vertex': Universe.VERTEX_CRITICAL,
    'vertex_critical': Universe.VERTEX_CRITICAL,
    'subgraph': Universe.CRITICAL,
    'critical': Universe.CRITICAL,
}

def _parser() -> argparse.ArgumentParser:
    source = argparse.ArgumentParser(add_help=False)
    inputs = source.add_mutually_exclusive_group()
    inputs.add_argument('--g6', metavar='S', help='graph6 string')
    inputs.add_argument('--g6-file', metavar='P', help='file of graph6 lines')
    inputs.add_argument('--edges', metavar='P', help='edge list file')
    inputs.add_argument('--family', metavar='SPEC', help='family identifier, e.g. "F1(l=5)"')

    parser = argparse.ArgumentParser(prog='pcolor', description='Packing colorings and critical graphs.')
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('chi', parents=[source], help='packing chromatic number and a witness')
    color = commands.add_parser('color', parents=[source], help='a k-packing coloring or NONE')
    color.add_argument('--k', type=int, required=True)
    commands.add_parser('critical', parents=[source], help='criticality report')
    classifier = commands.add_parser('classify', parents=[source], help='family memberships')
    classifier.add_argument('--universe', choices=sorted(UNIVERSES), default='vertex')
    commands.add_parser('g3', parents=[source], help='certificate for packing chromatic number 3 or NOT-3')
    commands.add_parser('gen', parents=[source], help='emit graph6')
    listing = commands.add_parser('list', help='emit the members of a universe as graph6')
    listing.add_argument('--universe', choices=sorted(UNIVERSES), default='vertex')
    listing.add_argument('--max-n', type=int, default=DEFAULT_LIST_ORDER)
    verify = commands.add_parser('verify', help='run an exhaustive verification')
    verify.add_argument('--theorem', choices=[str(t) for t in TheoremId], required=True)
    verify.add_argument('--max-n', type=int)
    verify.add_argument('--corpus', metavar='P')
    verify.add_argument('--jobs', type=int)
    verify.add_argument('--log-dir', metavar='DIR')
    render = commands.add_parser('render', parents=[source], help='emit DOT')
    render.add_argument('--colored', action='store_true', help='fill vertices with a minimum packing coloring')
    return parser

def default_jobs() -> int:
    '''Worker count from PCOLOR_JOBS, 1 when unset.'''
    value = os.environ.get(JOBS_VARIABLE, '').strip()
    if not value:
        return 1
    if not value.isdigit() or int(value) < 1:
        raise ValueError(f'{JOBS_VARIABLE} must be a positive integer, got {value!r}.')
    return int(value)

def _read(path: str) -> str:
    with open(path, 'r', encoding='utf-8') as file:
        return file.read()

def _graphs(args: argparse.Namespace, stdin: TextIO) -> List[Tuple[str, Graph]]:
    if args.g6 is not None:
        return [(args.g6, parse_graph6(args.g6))]
    if args.edges is not None:
        return [(args.edges, parse_edge_list(_read(args.edges)))]
    if args.family is not None:
        fid = parse_family_id(args.family)
        return [(str(fid), generate(fid))]
    text = _read(args.g6_file) if args.g6_file is not None else stdin.read()
    graphs = list(read_graph6_lines(text))
    if not graphs:
        raise ValueError('No graph in the input.')
    return graphs

def _execute(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    match args.command:
        case 'list':
            for fid, g in list_members(UNIVERSES[args.universe], args.max_n):
                out.write(f'{to_graph6(g)} # {fid}\n')
            return 0
        case 'verify':
            jobs = default_jobs() if args.jobs is None else args.jobs
            err.write(f'verifying {args.theorem} with {jobs} job(s)\n')
            report = run_theorem(TheoremId(args.theorem), args.max_n, args.corpus, jobs)
            out.write(report.table())
            if args.log_dir is not None:
                for path in flush_registry(args.log_dir):
                    err.write(f'wrote {path}\n')
            return 0 if report.verified else 1
    graphs = _graphs(args, stdin)
    for name, g in graphs:
        if len(graphs) > 1:
            out.write(f'# {name}\n')
        match args.command:
            case 'chi':
                result = chi_rho(g)
                out.write(f'chi_rho = {result.value}\n')
                out.write(format_coloring(result.witness))
            case 'color':
                coloring = find_k_packing_coloring(g, args.k)
                out.write('NONE\n' if coloring is None else format_coloring(coloring))
            case 'critical':
                report = analyze(g)
                out.write(report.table())
                out.write(report.lines())
            case 'classify':
                families = classify(g, UNIVERSES[args.universe]).families
                out.write(''.join(f'{fid}\n' for fid in families) or 'NONE\n')
            case 'g3':
                certificate = recognize_g3(g)
                out.write('NOT-3\n' if certificate is None else certificate.lines())
            case 'gen':
                out.write(f'{to_graph6(g)}\n')
            case 'render':
                colors = chi_rho(g).witness.assignment if args.colored and g.order else None
                out.write(to_dot(g, colors))
    return 0

def run(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None,
        stdin: Optional[TextIO] = None) -> int:
    '''
    Runs one command and returns its exit status.

    Arguments:
        argv: Sequence[str] ~ arguments without the program name
        out, err, stdin: TextIO ~ streams, the process streams by default
    '''
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    stdin = sys.stdin if stdin is None else stdin
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = _parser().parse_args(list(argv))
    except SystemExit as exit_:
        return 2 if exit_.code else 0
    try:
        return _execute(args, out, err, stdin)
    except (ValueError, OSError) as error:
        err.write(f'pcolor: error: {error}\n')
        return 2

def main() -> None:
    '''Console entry point.'''
    sys.exit(run(sys.argv[1:]))
