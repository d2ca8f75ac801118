#!/usr/bin/env python3
"""
Cube Magic - Command-line entry point

Counts, enumerates, decomposes and verifies magic labellings of the cube:
- count / enumerate labellings with a given magic sum
- decompose / compose through the eight-type decomposition
- series expansion of the closed-form generating functions
- group inspection and the verification suites

Results go to standard output (JSON, or CSV via --format csv); reports and
diagnostics go to standard error.
"""

import argparse
import csv
import json
import os
import sys
from typing import Optional

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import DEFAULT_MAX_SUM, DEFAULT_SERIES_TERMS, MAX_LABEL
from src.cone import TAGS, TypeDecomposition, classify, compose
from src.cube_model import EDGE_IDS, labelling_to_json, parse_labelling
from src.enumeration import canonical_mask, count_report, distinct_mask, labelling_blocks
from src.series import (
    closed_form_F1_spec,
    closed_form_F2_spec,
    closed_form_G,
    closed_form_Gstar,
    expand,
)
from src.symmetry import build_group, orbits, stabilizer
from src.verifier import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2

SERIES_TARGETS = {
    "G": closed_form_G,
    "Gstar": closed_form_Gstar,
    "F1": closed_form_F1_spec,
    "F2": closed_form_F2_spec,
}


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0 or value > MAX_LABEL:
        raise argparse.ArgumentTypeError(f"must be between 0 and {MAX_LABEL}, got {value}")
    return value


def parse_ks(text: str) -> tuple[int, ...]:
    try:
        ks = tuple(int(part) for part in text.split(','))
    except ValueError:
        raise ValueError(f"Malformed multiplicities {text!r}; expected six comma-separated integers")
    return ks


def write_json(data, stream=None):
    stream = stream or sys.stdout
    json.dump(data, stream)
    stream.write('\n')


def write_csv(rows, stream=None):
    writer = csv.writer(stream or sys.stdout, lineterminator="\n")
    writer.writerows(rows)


def cmd_count(args) -> int:
    report = count_report(args.sum, distinct=args.distinct)
    write_json(report.to_json())
    return EXIT_OK


def selected_rows(args):
    for labels in labelling_blocks(args.sum):
        if args.distinct or args.canonical:
            labels = labels[distinct_mask(labels)]
        if args.canonical:
            labels = labels[canonical_mask(labels)]
        for row in labels:
            yield [int(x) for x in row]


def cmd_enumerate(args) -> int:
    count = 0
    if args.format == 'csv':
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow([f"x{edge}" for edge in EDGE_IDS])
        for row in selected_rows(args):
            writer.writerow(row)
            count += 1
    else:
        rows = list(selected_rows(args))
        count = len(rows)
        write_json(rows)
    print(f"  {count} labelling(s) with magic sum {args.sum}", file=sys.stderr)
    return EXIT_OK


def cmd_decompose(args) -> int:
    labelling = parse_labelling(args.labelling)
    write_json(classify(labelling).to_json())
    return EXIT_OK


def cmd_compose(args) -> int:
    decomposition = TypeDecomposition(tag=args.type, ks=parse_ks(args.ks))
    write_json(labelling_to_json(compose(decomposition)))
    return EXIT_OK


def cmd_series(args) -> int:
    coefficients = expand(SERIES_TARGETS[args.target](), args.terms)
    if args.format == 'csv':
        write_csv([["r", "coefficient"]] + [[r, c] for r, c in enumerate(coefficients)])
    else:
        write_json([str(c) for c in coefficients])
    return EXIT_OK


def cmd_group(args) -> int:
    group = build_group()
    if args.show == 'elements':
        write_json([u.to_cycles() for u in group])
    elif args.show == 'orbits':
        write_json(sorted(sorted(o) for o in orbits(group)))
    else:
        subgroup = stabilizer(group, args.edge)
        write_json({
            'edge': args.edge,
            'elements': [u.to_cycles() for u in subgroup],
            'orbits': sorted(sorted(o) for o in orbits(subgroup)),
        })
    return EXIT_OK


def cmd_verify(args) -> int:
    print("=" * 60, file=sys.stderr)
    print(f"Cube Magic - verification suite '{args.suite}' (max sum {args.max_sum})", file=sys.stderr)
    print("=" * 60, file=sys.stderr)

    result = run_suite(args.suite, max_sum=args.max_sum, show_progress=not args.quiet)
    result.print_report()
    write_json(result.to_json())
    return EXIT_VERIFICATION_FAILED if result.has_issues else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cube-magic",
        description="Magic labellings of the cube: counting, decomposition, symmetry and series",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    count = subparsers.add_parser('count', help='Count magic labellings with a given magic sum')
    count.add_argument('--sum', type=nonnegative_int, required=True, help='Magic sum r')
    count.add_argument('--distinct', action='store_true', help='Also count distinct labellings and orbits')
    count.set_defaults(handler=cmd_count)

    enumerate_ = subparsers.add_parser('enumerate', help='List magic labellings with a given magic sum')
    enumerate_.add_argument('--sum', type=nonnegative_int, required=True, help='Magic sum r')
    enumerate_.add_argument('--distinct', action='store_true', help='Only labellings with 12 different labels')
    enumerate_.add_argument('--canonical', action='store_true', help='Only canonical orbit representatives')
    enumerate_.add_argument('--format', choices=('json', 'csv'), default='json')
    enumerate_.set_defaults(handler=cmd_enumerate)

    decompose = subparsers.add_parser('decompose', help='Type and multiplicities of a labelling')
    decompose.add_argument('--labelling', required=True, help='12 comma-separated labels or a JSON array')
    decompose.set_defaults(handler=cmd_decompose)

    compose_ = subparsers.add_parser('compose', help='Labelling from a type and multiplicities')
    compose_.add_argument('--type', choices=TAGS, required=True)
    compose_.add_argument('--ks', required=True, help='Six comma-separated nonnegative integers')
    compose_.set_defaults(handler=cmd_compose)

    series = subparsers.add_parser('series', help='Expand a closed-form generating function')
    series.add_argument('--target', choices=tuple(SERIES_TARGETS), default='G')
    series.add_argument('--terms', type=nonnegative_int, default=DEFAULT_SERIES_TERMS,
                        help='Highest power of y to report')
    series.add_argument('--format', choices=('json', 'csv'), default='json')
    series.set_defaults(handler=cmd_series)

    group = subparsers.add_parser('group', help='Inspect the edge symmetry group U')
    group.add_argument('--show', choices=('elements', 'orbits', 'stabilizer'), default='elements')
    group.add_argument('--edge', type=int, choices=EDGE_IDS, default=1, help='Edge fixed by the stabilizer')
    group.set_defaults(handler=cmd_group)

    verify = subparsers.add_parser('verify', help='Run the verification suites')
    verify.add_argument('--suite', choices=SUITES, default='all')
    verify.add_argument('--max-sum', type=nonnegative_int, default=DEFAULT_MAX_SUM,
                        help='Largest magic sum for exhaustive oracle comparisons')
    verify.add_argument('--quiet', action='store_true', help='No progress bars')
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID_INPUT if e.code else EXIT_OK

    try:
        return args.handler(args)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except AssertionError as e:
        print(f"Verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except MemoryError:
        print("Error: not enough memory for this magic sum; try a smaller --sum", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
