"""
Command-line interface for flag-variety cohomology computations.

The ``--parabolic`` flag always takes the DEFINING node set of W_P: the
simple reflections that generate the parabolic Weyl group. An empty value is
the Borel subgroup (G/B), a single node is a minimal parabolic, and
``--type A3 --parabolic 1,3`` is the Grassmannian Gr(2, 4).
"""

import argparse
import json
import logging
import sys
import time
from typing import Optional, Sequence

from .core.acceptance import verify_all
from .core.borel import (
    alpha_square_reduction,
    betti_numbers,
    complex_dimension,
    degree2_generation_check,
    generation_survey,
)
from .core.grassmann import example_report
from .core.invariants import set_ideal_generators
from .core.root_system import ParabolicSubset, build_root_system, invariant_gram, parse_cartan_type
from .core.weyl_group import WeylGroup, coset_length_counts, require_group_size
from .utils.cache import configure_cache
from .utils.config import Config
from .utils.errors import (
    ConfigError,
    GroupTooLarge,
    InvalidCartanType,
    InvalidParameter,
    NodeOutOfRange,
    PartitionOutOfBox,
)
from .utils.helpers import format_rational, format_duration

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (InvalidCartanType, NodeOutOfRange, PartitionOutOfBox, GroupTooLarge, InvalidParameter, ConfigError)


class UsageError(Exception):
    """Raised instead of exiting when argparse rejects the command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='flagcoh',
        description="Rational cohomology of flag varieties G/P via the Borel presentation",
    )
    parser.add_argument('--json', action='store_true', help='Machine-readable JSON output')
    parser.add_argument('--cache-dir', type=str, default=None,
                        help='Invariant cache directory (overrides FLAGCOH_CACHE)')
    parser.add_argument('--config', type=str, default=None, help='Path to YAML configuration file')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More logging on stderr (-v info, -vv debug)')

    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    roots = sub.add_parser('roots', help='Positive roots and the invariant form')
    roots.add_argument('--type', required=True, help='Cartan type, e.g. A2, F4')

    weyl = sub.add_parser('weyl', help='Weyl group order and length histogram')
    weyl.add_argument('--type', required=True)
    weyl.add_argument('--gens', default=None,
                      help='Generating nodes, e.g. 1,2 (default: all nodes)')

    parabolic_help = ('DEFINING node set of W_P, e.g. 1,3; empty for the Borel subgroup '
                      '(a single node is a minimal parabolic)')

    betti = sub.add_parser('betti', help='Betti numbers from the Borel presentation and from Schubert cells')
    betti.add_argument('--type', required=True)
    betti.add_argument('--parabolic', nargs='?', const='', default='', help=parabolic_help)

    gen2 = sub.add_parser('check-gen2', help='Is H*(G/P) generated by H^2?')
    gen2.add_argument('--type', required=True)
    group = gen2.add_mutually_exclusive_group(required=True)
    group.add_argument('--parabolic', nargs='?', const='', default=None, help=parabolic_help)
    group.add_argument('--all', action='store_true', help='Survey every parabolic subset')

    reduce_alpha2 = sub.add_parser('reduce-alpha2', help='Certificate reducing alpha^2 modulo invariants')
    reduce_alpha2.add_argument('--type', required=True)
    reduce_alpha2.add_argument('--node', type=int, required=True, help='Node of the simple root alpha')

    example = sub.add_parser('example', help='The Fl(1,2; C^{2n+2}) example')
    example.add_argument('--n', type=int, required=True)

    verify = sub.add_parser('verify-all', help='Run the full acceptance suite')
    verify.add_argument('--max-rank', type=int, default=None, help='Largest rank in the sweep (default 4)')
    verify.add_argument('--workers', type=int, default=None, help='Worker processes (default 1)')

    return parser


def _parse_parabolic(text: Optional[str]) -> ParabolicSubset:
    try:
        return ParabolicSubset.from_text(text or '')
    except ValueError as e:
        if isinstance(e, NodeOutOfRange):
            raise
        raise UsageError(str(e))


def _banner(title: str) -> None:
    print("=" * 60)
    print(title)
    print("=" * 60)


def _emit_json(data, config: Config) -> None:
    print(json.dumps(data, indent=config.get('output.json_indent', 2), sort_keys=False))


def cmd_roots(args, config: Config) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    gram = invariant_gram(rs)
    gram_rows = [[int(gram[i, j]) for j in range(rs.rank)] for i in range(rs.rank)]
    if args.json:
        _emit_json({
            'type': str(rs),
            'rank': rs.rank,
            'cartan_matrix': [list(row) for row in rs.cartan_matrix],
            'symmetrizers': list(rs.symmetrizers),
            'gram': gram_rows,
            'positive_roots': [list(r) for r in rs.positive_roots],
            'highest_root': list(rs.highest_root),
        }, config)
        return EXIT_OK
    _banner(f"Root system {rs}")
    print(f"Rank: {rs.rank}")
    print(f"Positive roots ({len(rs.positive_roots)}):")
    for r in rs.positive_roots:
        print(f"  height {sum(r)}: {r}")
    print(f"Highest root: {rs.highest_root}")
    print("Invariant form:")
    for row in gram_rows:
        print("  " + " ".join(f"{x:3d}" for x in row))
    return EXIT_OK


def cmd_weyl(args, config: Config) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    gens = _parse_parabolic(args.gens) if args.gens is not None else rs.all_nodes()
    group = WeylGroup(rs, gens, config.get('weyl.max_group_order'), config.get('weyl.iteration_budget'))
    histogram = group.length_histogram()
    if args.json:
        _emit_json({'type': str(rs), 'gens': list(gens.sorted()), 'order': group.order,
                    'length_histogram': histogram}, config)
        return EXIT_OK
    _banner(f"Weyl group of {rs}, generators {gens}")
    print(f"Order: {group.order}")
    print(f"Longest element: length {group.longest_element.length}, word {group.longest_element.word}")
    print("Elements by length: " + ", ".join(str(c) for c in histogram))
    return EXIT_OK


def cmd_betti(args, config: Config) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    P = _parse_parabolic(args.parabolic).validate(rs.rank)
    require_group_size(rs, config.get('weyl.max_group_order'))
    cells = coset_length_counts(rs, P, config.get('weyl.max_group_order'))
    borel = betti_numbers(rs, P)
    match = borel == cells
    if args.json:
        _emit_json({'type': str(rs), 'parabolic': list(P.sorted()), 'dimension': complex_dimension(rs, P),
                    'borel': borel.to_list(), 'schubert': cells.to_list(),
                    'verdict': 'MATCH' if match else 'MISMATCH'}, config)
        return EXIT_OK
    _banner(f"H*({rs}/P), P = {P}")
    print(f"Complex dimension: {complex_dimension(rs, P)}")
    print(f"{'degree':>8} {'borel':>8} {'schubert':>9}")
    for d, (b, c) in enumerate(zip(borel, cells)):
        print(f"{2 * d:>8} {b:>8} {c:>9}")
    print(f"Poincare polynomial: {borel.poincare_polynomial()}")
    print(f"{'✓ MATCH' if match else '✗ MISMATCH'}")
    return EXIT_OK


def _print_report(label: str, report) -> None:
    if report.holds:
        print(f"✓ {label}: generated by H^2")
    else:
        print(f"✗ {label}: fails in degree {2 * report.first_failing_degree} (deficit {report.deficit})")


def cmd_check_gen2(args, config: Config) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    require_group_size(rs, config.get('weyl.max_group_order'))
    if args.all:
        survey = generation_survey(rs)
        if args.json:
            _emit_json({'type': str(rs), 'survey': [dict(parabolic=list(P.sorted()), **r.to_json())
                                                    for P, r in survey.items()]}, config)
            return EXIT_OK
        _banner(f"Degree-2 generation survey for {rs}")
        for P, report in survey.items():
            _print_report(f"P = {P}", report)
        return EXIT_OK

    P = _parse_parabolic(args.parabolic).validate(rs.rank)
    report = degree2_generation_check(rs, P)
    if args.json:
        _emit_json(dict(type=str(rs), parabolic=list(P.sorted()), **report.to_json()), config)
        return EXIT_OK
    _banner(f"Degree-2 generation for {rs}/P, P = {P}")
    print(f"Betti numbers:      {report.betti.to_list()}")
    print(f"Generated by H^2:   {list(report.generated)}")
    _print_report(f"P = {P}", report)
    return EXIT_OK


def cmd_reduce_alpha2(args, config: Config) -> int:
    rs = build_root_system(parse_cartan_type(args.type))
    certificate = alpha_square_reduction(rs, args.node)
    if args.json:
        _emit_json(dict(type=str(rs), **certificate.to_json()), config)
        return EXIT_OK
    _banner(f"alpha^2 reduction for {rs}, alpha = alpha_{certificate.alpha}")
    print(f"Invariant quadric q = {certificate.q.pretty()}")
    print(f"a = {format_rational(certificate.a)}")
    for b, beta in certificate.pairs:
        print(f"  b = {format_rational(b)}, beta = {beta.pretty()}")
    print(f"alpha^2 = {certificate.reduction().pretty()}  (mod invariants)")
    print("✓ certificate verified")
    return EXIT_OK


def cmd_example(args, config: Config) -> int:
    report = example_report(args.n)
    if args.json:
        _emit_json(report, config)
        return EXIT_OK
    _banner(f"Fl(1,2; C^{2 * args.n + 2}) over P^{2 * args.n + 1}, n = {args.n}")
    print(f"Chern classes of Omega(2): {report['chern']}")
    print(f"f  = {report['f_text']}")
    print(f"f0 = {report['f0_text']}")
    print(f"Alternating Schubert sum: {report['alternating_sum_text']}")
    print(f"Fiber class sign: {report['epsilon']:+d}")
    for key, label in (('top_chern_vanishes', 'top Chern class vanishes'),
                       ('f_equals_f0_D', 'f = f0 . D'),
                       ('f0_D_vanishes', 'f0 . D = 0 in the ring'),
                       ('f0_nonzero_in_ring', 'f0 != 0 in the ring'),
                       ('alternating_sum_annihilated', 'alternating sum . sigma_1 = 0')):
        print(f"{'✓' if report[key] else '✗'} {label}")
    print(f"Graded dimensions: {report['graded_dimensions']}")
    return EXIT_OK


def cmd_verify_all(args, config: Config) -> int:
    if args.max_rank is not None:
        config.set('verify.max_rank', args.max_rank)
    if args.workers is not None:
        config.set('verify.workers', args.workers)
    start = time.perf_counter()
    passed, results = verify_all(config, progress=False if args.json else None)
    failures = [r for r in results if not r.passed]
    logger.info("verify-all: %d checks in %s", len(results), format_duration(time.perf_counter() - start))
    if args.json:
        _emit_json({'passed': passed, 'checks': len(results),
                    'failures': [r.to_json() for r in failures]}, config)
    else:
        _banner(f"Acceptance suite (max rank {config.get('verify.max_rank')})")
        for r in results:
            print(f"{'✓' if r.passed else '✗'} [{r.criterion}] {r.name}")
        print("=" * 60)
        print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    return EXIT_OK if passed else EXIT_FAILURE


COMMANDS = {
    'roots': cmd_roots,
    'weyl': cmd_weyl,
    'betti': cmd_betti,
    'check-gen2': cmd_check_gen2,
    'reduce-alpha2': cmd_reduce_alpha2,
    'example': cmd_example,
    'verify-all': cmd_verify_all,
}


def _setup_logging(config: Config, verbosity: int) -> None:
    level = getattr(logging, str(config.get('logging.level', 'WARNING')).upper(), logging.WARNING)
    if verbosity == 1:
        level = min(level, logging.INFO)
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=config.get('logging.format'), stream=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and run one subcommand.

    Returns:
        0 on success, 1 if verify-all finds a failure, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = Config.from_environment(args.config)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: cannot read configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.cache_dir:
        config.set('invariants.cache_dir', args.cache_dir)
    _setup_logging(config, args.verbose)
    configure_cache(config.get('invariants.cache_dir'))
    set_ideal_generators(config.get('invariants.ideal_generators', 'indecomposable'))

    try:
        return COMMANDS[args.command](args, config)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    """Console-script entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
