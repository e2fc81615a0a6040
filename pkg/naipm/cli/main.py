# coding: utf-8
# Standard Python libraries
import argparse
import sys

# naipm imports
from .RunConfig import RunConfig, trace_formats, embed_modes
from .run_solve import run_solve
from .run_embed import run_embed
from .run_bench import run_bench

def build_parser():
    """argparse.ArgumentParser : The parser of the naipm command."""
    parser = argparse.ArgumentParser(
        prog='naipm',
        description='Non-Archimedean interior point solver for lexicographic '
                    'linear and quadratic programs.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    solve_parser = subparsers.add_parser('solve', help='solve a problem file')
    solve_parser.add_argument('input', help='problem file or bundled fixture name')
    solve_parser.add_argument('--eps', type=float, default=None,
                              help='convergence tolerance')
    solve_parser.add_argument('--max-it', type=int, default=None,
                              help='maximum number of iterations')
    solve_parser.add_argument('--ban-len', type=int, default=None,
                              help='number of stored monosemia per value')
    solve_parser.add_argument('--trace', default=None,
                              help='file the iteration trace is written to')
    solve_parser.add_argument('--format', choices=trace_formats, default='table',
                              help='trace format')
    solve_parser.add_argument('--embed', choices=embed_modes, default='auto',
                              help='embed the problem before solving, auto follows the '
                                   'problem file')
    solve_parser.add_argument('--verbose', action='store_true',
                              help='print solver progress')

    embed_parser = subparsers.add_parser('embed', help='print the embedded problem')
    embed_parser.add_argument('input', help='problem file or bundled fixture name')
    embed_parser.add_argument('--ban-len', type=int, default=None,
                              help='number of stored monosemia per value')

    bench_parser = subparsers.add_parser('bench', help='run the bundled benchmark')
    bench_parser.add_argument('--only', action='append', default=None,
                              help='fixture to run, may be repeated')
    bench_parser.add_argument('--verbose', action='store_true',
                              help='print solver progress')
    return parser

def main(args=None):
    """
    Entry point of the naipm command.

    Parameters
    ----------
    args : list of str, optional
        The command-line arguments.  Default reads sys.argv.

    Returns
    -------
    int
        The process exit code.
    """
    parser = build_parser()
    try:
        options = parser.parse_args(args)
    except SystemExit as err:
        return 1 if err.code else 0

    if options.command == 'bench':
        try:
            report, passed = run_bench(only=options.only, verbose=options.verbose)
        except KeyError as err:
            print(f'error: {err.args[0]}', file=sys.stderr)
            return 1
        print(report.to_string(index=False))
        if not passed:
            failed = report[~report['passed']]
            print(f'{len(failed)} check(s) failed:', file=sys.stderr)
            print(failed.to_string(index=False), file=sys.stderr)
            return 1
        return 0

    try:
        if options.command == 'solve':
            cfg = RunConfig(options.input, eps=options.eps, max_it=options.max_it,
                            ban_length=options.ban_len, trace=options.trace,
                            trace_format=options.format, embed=options.embed,
                            verbose=options.verbose)
        else:
            cfg = RunConfig(options.input, ban_length=options.ban_len)
    except ValueError as err:
        print(f'error: {err}', file=sys.stderr)
        return 1

    if options.command == 'solve':
        return run_solve(cfg)
    return run_embed(cfg)

def console_main():
    """Console script wrapper exiting with the code of main."""
    sys.exit(main())
