# coding: utf-8
from .RunConfig import RunConfig
from .load_problem import load_problem
from .run_solve import run_solve, format_trace, exit_codes, numeric_failure_code
from .run_embed import run_embed
from .run_bench import run_bench
from .main import main, build_parser, console_main

__all__ = sorted(['RunConfig', 'load_problem', 'run_solve', 'format_trace',
                  'exit_codes', 'numeric_failure_code', 'run_embed', 'run_bench',
                  'main', 'build_parser', 'console_main'])
