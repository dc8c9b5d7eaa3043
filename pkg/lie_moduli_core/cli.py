"""
Command line interface.

    python -m lie_moduli_core.cli classify algebra.json
    python -m lie_moduli_core.cli deform algebra.json --order 4 --basis paper
    python -m lie_moduli_core.cli tables --dim 4

Results go to stdout as JSON (tables as text); INFO/WARN/DEBUG lines go to
stderr. Exit codes: 0 ok, 1 validation failure, 2 usage error.
"""
import argparse
import sys
from contextlib import redirect_stdout
from pathlib import Path
from typing import Any, List, Optional, Tuple

from .catalog import describe, parse_point_spec, spec_form
from .classifier import classify, invariant_signature
from .cochains import is_codifferential, jacobi_oracle, require_codifferential
from .cohomology import cohomology
from .deformation import extend
from .exceptions import LieModuliError, MalformedInputError, UnknownPointSpecError
from .known_bases import literature_basis, literature_spec_for
from .moduli_graph import DEFAULT_GRAPH
from .serialization import codifferential_to_dict, load, to_json
from .tables import cohomology_table, format_table, mismatches
from .transform import random_orbit_pairs
from . import config as core_config

Outcome = Tuple[Any, int]


def _classify(args: argparse.Namespace) -> Outcome:
    d = require_codifferential(load(args.file))
    out = describe(classify(d))
    if d.n == 4:
        out['signature'] = invariant_signature(d).to_dict()
    return out, core_config.EXIT_OK


def _cohomology(args: argparse.Namespace) -> Outcome:
    d = load(args.file)
    return cohomology(d).to_dict(include_bases=args.bases), core_config.EXIT_OK


def _jacobi(args: argparse.Namespace) -> Outcome:
    d = load(args.file)
    if is_codifferential(d):
        return {'valid': True}, core_config.EXIT_OK
    triple = jacobi_oracle(d)
    print(f"ERROR: Jacobi identity fails on triple {triple}", file=sys.stderr)
    return {'valid': False, 'failing_triple': list(triple) if triple else None}, core_config.EXIT_VALIDATION_FAILURE


def _deform(args: argparse.Namespace) -> Outcome:
    d = require_codifferential(load(args.file))
    basis = None
    if args.basis in ('paper', 'literature'):
        spec = literature_spec_for(d)
        if spec is None:
            print("WARN: no literature H^2 basis for this codifferential, using the computed basis")
        else:
            print(f"INFO: using the literature H^2 basis of {spec}")
            basis = literature_basis(spec)
    result = extend(d, basis=basis, max_order=args.order)
    status = core_config.EXIT_OK if not result.unexplained_residuals else core_config.EXIT_VALIDATION_FAILURE
    return result.to_dict(), status


def _neighbors(args: argparse.Namespace) -> Outcome:
    where = args.spec if args.spec in DEFAULT_GRAPH.nodes else parse_point_spec(args.spec)
    out = DEFAULT_GRAPH.neighbors(where)
    out['reachable'] = sorted(DEFAULT_GRAPH.reachable(where))
    return out, core_config.EXIT_OK


def _graph(args: argparse.Namespace) -> Outcome:
    if args.dot is None:
        return DEFAULT_GRAPH.to_dict(), core_config.EXIT_OK
    dot = DEFAULT_GRAPH.emit_graph_dot(args.name)
    if args.dot == '-':
        return dot, core_config.EXIT_OK
    Path(args.dot).write_text(dot)
    print(f"INFO: wrote {len(DEFAULT_GRAPH.nodes)} nodes and {len(DEFAULT_GRAPH.edges)} edges to {args.dot}")
    return {'dot': args.dot, 'nodes': len(DEFAULT_GRAPH.nodes), 'edges': len(DEFAULT_GRAPH.edges)}, core_config.EXIT_OK


def _tables(args: argparse.Namespace) -> Outcome:
    df = cohomology_table(args.dim)
    bad = mismatches(df)
    status = core_config.EXIT_OK if bad.empty else core_config.EXIT_VALIDATION_FAILURE
    if not bad.empty:
        print(f"ERROR: {len(bad)} rows differ from the stored table: {', '.join(bad['row'])}", file=sys.stderr)
    return format_table(df), status


def _orbit_test(args: argparse.Namespace) -> Outcome:
    d = spec_form(args.spec, args.dim)
    expected = classify(d)
    failures = []
    for change, image in random_orbit_pairs(d, args.seed, args.count):
        got = classify(image)
        if got != expected:
            failures.append({'g': [[str(x) for x in row] for row in change.matrix.data],
                             'image': codifferential_to_dict(image), 'classified': got.label})
    print(f"INFO: {args.count - len(failures)}/{args.count} transforms of {args.spec} classify to {expected.label}")
    status = core_config.EXIT_OK if not failures else core_config.EXIT_VALIDATION_FAILURE
    return {'spec': args.spec, 'point': expected.to_dict(), 'count': args.count, 'seed': args.seed,
            'failures': failures}, status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='lie-moduli',
                                     description="Moduli of 3 and 4 dimensional complex Lie algebras over Q")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', help="Canonical moduli point of a codifferential")
    p.add_argument('file')
    p.set_defaults(handler=_classify)

    p = sub.add_parser('cohomology', help="h^0..h^n of the adjoint cohomology")
    p.add_argument('file')
    p.add_argument('--bases', action='store_true', help="Also print cocycle, coboundary and complement bases")
    p.set_defaults(handler=_cohomology)

    p = sub.add_parser('jacobi', help="Check the Jacobi identity")
    p.add_argument('file')
    p.set_defaults(handler=_jacobi)

    p = sub.add_parser('deform', help="Versal deformation and relations on the base")
    p.add_argument('file')
    p.add_argument('--order', type=int, default=core_config.DEFAULT_MAX_ORDER)
    p.add_argument('--basis', choices=('paper', 'computed', 'literature'), default='computed',
                   help="'paper' injects the published H^2 basis; 'literature' is an alias")
    p.set_defaults(handler=_deform)

    p = sub.add_parser('neighbors', help="Jump and smooth targets of a point-spec or graph node")
    p.add_argument('spec')
    p.set_defaults(handler=_neighbors)

    p = sub.add_parser('graph', help="The moduli graph as JSON, or DOT with --dot")
    p.add_argument('--dot', metavar='OUT', help="Write DOT to OUT ('-' for stdout)")
    p.add_argument('--name', default=core_config.DEFAULT_DOT_GRAPH_NAME)
    p.set_defaults(handler=_graph)

    p = sub.add_parser('tables', help="Recompute a cohomology table")
    p.add_argument('--dim', type=int, choices=(3, 4), default=4)
    p.set_defaults(handler=_tables)

    p = sub.add_parser('orbit-test', help="Classify random GL(n, Z) transforms of a point")
    p.add_argument('spec')
    p.add_argument('--count', type=int, default=core_config.DEFAULT_ORBIT_SAMPLES)
    p.add_argument('--seed', type=int, default=core_config.DEFAULT_ORBIT_SEED)
    p.add_argument('--dim', type=int, choices=(3, 4), default=4)
    p.set_defaults(handler=_orbit_test)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with redirect_stdout(sys.stderr):
            payload, status = args.handler(args)
    except (MalformedInputError, UnknownPointSpecError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return core_config.EXIT_USAGE_ERROR
    except LieModuliError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return core_config.EXIT_VALIDATION_FAILURE
    except ValueError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return core_config.EXIT_USAGE_ERROR
    print(payload if isinstance(payload, str) else to_json(payload))
    return status


if __name__ == '__main__':
    sys.exit(main())
