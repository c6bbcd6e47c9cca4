#!/usr/bin/env python3
"""
SUPERCHAR - Command Line Interface
Computes spo/osp characters, sign groups and tensor coefficients and runs
the exact verification suites; results go to stdout as JSON or text
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from pydantic import ValidationError

from src.core.errors import LogicFault, SupercharError
from src.core.grassmann import check_highest_harmonic
from src.core.super_characters import osp_character, spo_character, trivial_character
from src.core.symfunc import hook_schur_expand
from src.core.wgroups import DualPair, bruteforce_wlambda, closed_index_set
from src.data import compute_config
from src.data.serializers import ResultSerializer
from src.ui.command_models import build_request
from src.verify.identities import IDENTITY_IDS, verify_identity
from src.verify.selftest import run_selftest
from src.verify.tensor import super_tensor_coeffs

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='superchar',
        description="Characters of spo(2m|2n) and osp(2m|2n) modules dual to O(d) and Sp(d)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    python superchar_cli.py hookschur [2] 1 1
    python superchar_cli.py character spo [] 1 1 1 --degree 4
    python superchar_cli.py verify glgl 1 1 1 --degree 3
    python superchar_cli.py tensor spo [1] [1] 1 1 1 1 --rank 2
    python superchar_cli.py wgroup spo [1] 2 4 --bruteforce
    python superchar_cli.py selftest --quick
        """
    )
    parser.add_argument('--format', choices=compute_config.OUTPUT_FORMATS, default=compute_config.DEFAULT_FORMAT,
                        help='Output format (default: json)')
    parser.add_argument('--verbose', action='store_true', help='Log progress at INFO level')
    parser.add_argument('--debug', action='store_true', help='Log per-term detail at DEBUG level')
    sub = parser.add_subparsers(dest='command', required=True)

    def degree(p):
        p.add_argument('--degree', type=int, default=compute_config.DEFAULT_DEGREE,
                       help=f'Truncation degree (default: {compute_config.DEFAULT_DEGREE})')

    p = sub.add_parser('hookschur', help='Hook Schur polynomial HS_lam(y; z)')
    p.add_argument('lam', help='Partition, e.g. [2,1]')
    p.add_argument('m', type=int)
    p.add_argument('n', type=int)

    p = sub.add_parser('character', help='Character of the module dual to lam')
    p.add_argument('kind', choices=['spo', 'osp'])
    p.add_argument('lam')
    p.add_argument('d', type=int)
    p.add_argument('m', type=int)
    p.add_argument('n', type=int)
    degree(p)

    p = sub.add_parser('trivial-character', help='Character of the module dual to the trivial representation')
    p.add_argument('group', choices=['O', 'Sp'])
    p.add_argument('d', type=int)
    p.add_argument('m', type=int)
    p.add_argument('n', type=int)
    degree(p)

    p = sub.add_parser('verify', help='Exact verification of a character identity')
    p.add_argument('identity', choices=IDENTITY_IDS)
    p.add_argument('d', type=int)
    p.add_argument('m', type=int)
    p.add_argument('n', type=int, nargs='?', default=0)
    degree(p)

    p = sub.add_parser('tensor', help='Tensor product coefficients')
    p.add_argument('kind', choices=['spo', 'osp'])
    p.add_argument('mu')
    p.add_argument('gamma')
    p.add_argument('d', type=int)
    p.add_argument('r', type=int)
    p.add_argument('m', type=int)
    p.add_argument('n', type=int)
    p.add_argument('--rank', type=int, default=None, help='Classical rank k (default: max(mu_1, gamma_1))')

    p = sub.add_parser('wgroup', help='Enright sign group of lam + d/2')
    p.add_argument('kind', choices=['spo', 'osp'])
    p.add_argument('lam')
    p.add_argument('d', type=int)
    p.add_argument('m', type=int)
    p.add_argument('--bruteforce', action='store_true', help='Use the root-condition oracle')

    p = sub.add_parser('hwv-check', help='Harmonicity of the joint highest weight vector')
    p.add_argument('lam')
    p.add_argument('d', type=int)
    p.add_argument('m', type=int)
    p.add_argument('n', type=int)
    p.add_argument('group', choices=['O', 'Sp'])

    p = sub.add_parser('selftest', help='Run the verification suites')
    p.add_argument('--quick', action='store_true', help='Reduced grids')
    return parser


def configure_logging(verbose: bool, debug: bool):
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, format=compute_config.LOG_FORMAT, stream=sys.stderr, force=True)


# ============================================================================
# Dispatch
# ============================================================================

def run(request) -> Tuple[object, int]:
    """Execute a validated request; returns (result, exit code)."""
    command = request.command
    if command == 'hookschur':
        return hook_schur_expand(request.lam, request.m, request.n), compute_config.EXIT_OK

    if command == 'character':
        compute = spo_character if request.kind == 'spo' else osp_character
        return compute(request.lam, request.d, request.m, request.n, request.degree), compute_config.EXIT_OK

    if command == 'trivial-character':
        result = trivial_character(DualPair.from_name(request.group), request.d, request.m, request.n,
                                   request.degree)
        return result, compute_config.EXIT_OK

    if command == 'verify':
        report = verify_identity(request.identity, request.d, request.m, request.n, request.degree)
        return report, compute_config.EXIT_OK if report.ok else compute_config.EXIT_MISMATCH

    if command == 'tensor':
        table = super_tensor_coeffs(request.mu, request.gamma, request.d, request.r, request.m, request.n,
                                    request.kind, request.rank)
        return table, compute_config.EXIT_OK

    if command == 'wgroup':
        pair = DualPair.from_name(request.kind)
        compute = bruteforce_wlambda if request.bruteforce else closed_index_set
        return compute(request.lam, request.d, request.m, pair), compute_config.EXIT_OK

    if command == 'hwv-check':
        report = check_highest_harmonic(request.lam, request.d, request.m, request.n,
                                        DualPair.from_name(request.group))
        return report, compute_config.EXIT_OK if report.all_zero else compute_config.EXIT_MISMATCH

    if command == 'selftest':
        reports = run_selftest(quick=request.quick)
        failed = any(not report.ok for report in reports)
        return reports, compute_config.EXIT_MISMATCH if failed else compute_config.EXIT_OK

    raise SupercharError(f"Unknown command {command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else compute_config.EXIT_USAGE

    configure_logging(args.verbose, args.debug)
    try:
        request = build_request(args.command, vars(args))
        result, status = run(request)
    except ValidationError as e:
        logger.error(f"Invalid arguments for {args.command}: {e}")
        return compute_config.EXIT_USAGE
    except LogicFault as e:
        logger.exception(f"Internal consistency failure: {e}")
        return compute_config.EXIT_USAGE
    except SupercharError as e:
        logger.error(f"{args.command}: {e}")
        return compute_config.EXIT_USAGE
    except KeyboardInterrupt:
        logger.warning("Interrupted by user")
        return compute_config.EXIT_USAGE
    except Exception as e:
        logger.exception(f"Fatal error: {e}")
        return compute_config.EXIT_USAGE

    print(ResultSerializer.render(args.command, result, request.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
