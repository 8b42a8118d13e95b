#!/usr/bin/env python3
"""
symchar - Main Controller

Graded Frobenius characters of the configuration-space algebras C_n, D_n,
the Orlik-Terao algebra OT_n and its relatives, with identity checks and a
brute-force oracle.
"""

import argparse
import logging
import sys
import time

from dotenv import load_dotenv

from config import DEFAULT_BASIS, DEFAULT_FORMAT, DEFAULT_JOBS, REPORTS_DIR
from src.frobchar.characters import IdentityFailure, named_character
from src.frobchar.verification import CHECK_NAMES, verify
from src.oracle.algebra import TooLarge, Variant
from src.oracle.oracle import oracle_character
from src.qseries.series import NotPolynomial
from src.reporting.output import build_record, render, render_verification, save_verification_report
from src.storage.chartab_cache import CharacterTableCache, default_cache_dir
from src.symfunc.character_table import set_table_store, stats

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ASSERTION = 3

FORMULAS = {
    "c": "C",
    "d": "D",
    "d-alt": "D_alt",
    "ot": "OT",
    "m": "M",
    "r": "R",
    "t": "T",
    "lyndon": "lyndon",
    "lambda": "Lambda",
    "lambdap": "LambdaP",
}


def setup_cache(args) -> None:
    """Install the on-disk character-table store unless --no-cache."""
    if args.no_cache:
        set_table_store(None)
        return
    directory = args.cache_dir or default_cache_dir()
    logger.info(f"Character-table cache at {directory}")
    set_table_store(CharacterTableCache(directory))


def _meta(start: float) -> dict:
    # taken after rendering terms, which is when character tables are consulted
    return {
        "ms": int((time.perf_counter() - start) * 1000),
        "cache_hits": stats.cache_hits,
        "table_build_ms": round(stats.build_ms, 1),
    }


def run_compute(args) -> int:
    """Print one named character."""
    start = time.perf_counter()
    character = named_character(FORMULAS[args.formula], args.n, args.max_q_degree)
    record = build_record(args.formula, character.value, args.basis, character.truncation)
    record.meta.update(_meta(start))
    print(render(record, args.format))
    return EXIT_OK


def run_verify(args) -> int:
    """Run the identity suite and save the report."""
    report = verify(
        args.check,
        args.n_max,
        order=args.max_q_degree,
        oracle=args.oracle,
        oracle_n_max=args.oracle_n_max,
        jobs=args.jobs,
    )
    print(render_verification(report))
    try:
        path = save_verification_report(report, args.report_dir)
        logger.info(f"Report written to {path}")
    except OSError as e:
        logger.warning(f"Could not write report to {args.report_dir}: {e}")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def run_oracle(args) -> int:
    """Print the brute-force character of a presented algebra."""
    start = time.perf_counter()
    value = oracle_character(Variant.parse(args.algebra), args.n, args.max_degree)
    record = build_record(f"oracle-{args.algebra}", value, args.basis, args.max_degree + 1)
    record.meta.update(_meta(start))
    print(render(record, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Graded Frobenius characters of C_n, D_n, OT_n, M_n and T_n')
    parser.add_argument('command', choices=['compute', 'verify', 'oracle'],
                        help='Command to execute')
    parser.add_argument('--formula', choices=sorted(FORMULAS), help='Character to compute')
    parser.add_argument('--n', type=int, help='Number of points')
    parser.add_argument('--max-q-degree', type=int, default=None,
                        help='Truncation order D for series (default n+1; per-check defaults for verify)')
    parser.add_argument('--basis', choices=['s', 'p', 'h', 'e', 'm'], default=DEFAULT_BASIS,
                        help='Output basis')
    parser.add_argument('--format', choices=['text', 'json', 'latex'], default=DEFAULT_FORMAT,
                        help='Output format')
    parser.add_argument('--check', choices=CHECK_NAMES, help='Identity to verify')
    parser.add_argument('--n-max', type=int, help='Largest n to verify')
    parser.add_argument('--oracle', action='store_true', help='Include formula-vs-oracle comparisons')
    parser.add_argument('--oracle-n-max', type=int, default=4, help='Largest n for oracle comparisons')
    parser.add_argument('--algebra', choices=['ot', 'c', 'd', 'm'], help='Algebra for the oracle')
    parser.add_argument('--max-degree', type=int, help='Highest q-degree for the oracle')
    parser.add_argument('--cache-dir', default=None, help='Character-table cache directory')
    parser.add_argument('--no-cache', action='store_true', help='Do not read or write the on-disk cache')
    parser.add_argument('--jobs', type=int, default=DEFAULT_JOBS, help='Parallel workers for verify')
    parser.add_argument('--report-dir', default=REPORTS_DIR, help='Directory for verification reports')
    parser.add_argument('--verbose', action='store_true', help='Log progress to stderr')
    return parser


def validate(parser: argparse.ArgumentParser, args) -> None:
    """Command-specific required arguments; parser.error exits with status 2."""
    if args.command == 'compute':
        if args.formula is None or args.n is None:
            parser.error("compute needs --formula and --n")
        if args.n < 1:
            parser.error("--n must be positive")
        if args.max_q_degree is not None and args.max_q_degree < 1:
            parser.error("--max-q-degree must be positive")
    elif args.command == 'verify':
        if args.check is None or args.n_max is None:
            parser.error("verify needs --check and --n-max")
        if args.n_max < 1 or args.oracle_n_max < 1 or args.jobs < 1:
            parser.error("--n-max, --oracle-n-max and --jobs must be positive")
    elif args.command == 'oracle':
        if args.algebra is None or args.n is None or args.max_degree is None:
            parser.error("oracle needs --algebra, --n and --max-degree")
        if args.n < 1 or args.max_degree < 0:
            parser.error("--n must be positive and --max-degree nonnegative")


def main(argv=None) -> int:
    """Main entry point."""
    # Load environment variables from .env file
    load_dotenv()

    parser = build_parser()
    args = parser.parse_args(argv)
    validate(parser, args)

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(asctime)s - %(levelname)s - %(message)s')
    setup_cache(args)

    try:
        if args.command == 'compute':
            return run_compute(args)
        if args.command == 'verify':
            return run_verify(args)
        return run_oracle(args)
    except (NotPolynomial, TooLarge, IdentityFailure) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())
