"""
Command-line interface.

One entry point with a subcommand per operation. Results go to stdout as
JSON (or CSV where requested); diagnostics go through logging to stderr.

Exit codes:
    0  success
    1  usage or parameter error
    2  invariant violation (e.g. a code that should be self-orthogonal is not)
    3  reproduced tables differ from the golden files
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .algebra.field import element_logs, make_field, solve_qplus1_power_eq_minus_one
from .algebra.lattice import (
    build_Delta_t,
    build_E0,
    check_t_range,
    delta_size,
    delta_size_closed_form,
    footprint_bound,
)
from .bounds.gilbert_varshamov import (
    LENGTHS_ADMISSIBLE,
    LENGTHS_ALL,
    admissible_lengths,
    gv_interval,
    qgv,
    qgv_scan_threshold,
    qgv_threshold_d3,
)
from .bounds.singleton import classify_singleton
from .catalog.engine import CatalogEngine
from .catalog.export import FORMAT_CSV, FORMAT_JSON, emit, render
from .catalog.models import FILTERS, SweepSpec
from .catalog.tables import diff_report, reproduce_tables
from .codes.construction import build_grid, build_twist, generator_matrix, load_eval_sets
from .codes.models import CodeParams, TwistVector
from .config import (
    CODE_TABLES,
    DEFAULT_DISTANCE_BUDGET,
    DEFAULT_THREADS,
    GOLDEN_DIR,
    RANGE_TABLES,
    TABLE_VERIFY_BUDGET,
    TABLE_VERIFY_MAX_LENGTH,
)
from .errors import (
    EXIT_CODES,
    GmccError,
    InvariantViolation,
    TableMismatchError,
    UsageError,
    exit_code_for,
)
from .verification.distance import brute_force_dual_distance, dual_distance_by_columns
from .verification.models import METHOD_FOOTPRINT, DistanceResult
from .verification.orthogonality import check_self_orthogonal

logger = logging.getLogger(__name__)

# A handler returns (payload, exit code); payload is JSON-able or raw text
HandlerResult = Tuple[Any, int]


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose errors exit with code 1 through UsageError."""

    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# ============================================================================
# SHARED CODE PARAMETERS
# ============================================================================

def _add_code_arguments(parser: argparse.ArgumentParser, with_t: bool = True) -> None:
    parser.add_argument("--q", type=int, required=True, help="odd prime power; codes over GF(q^2)")
    parser.add_argument("--lambda", dest="lam", type=int, default=1, help="divisor of q-1 (default 1)")
    parser.add_argument("--m", type=int, default=1, help="number of variables (default 1)")
    parser.add_argument(
        "--sizes",
        type=_int_list,
        default=None,
        help="a_2,...,a_m (default: every a_j equal to a_1 = lambda(q+1))",
    )
    parser.add_argument("--eval-sets", default=None, help="JSON file of generator-exponent lists for A_2..A_m")
    if with_t:
        parser.add_argument("--t", type=int, required=True, help="designed distance, 2 <= t <= (q+3)/2")


def _params_from_args(args: argparse.Namespace) -> CodeParams:
    if args.m < 1:
        raise UsageError(f"--m must be >= 1, got {args.m}")
    if args.sizes is not None:
        tail = list(args.sizes)
        if len(tail) != args.m - 1:
            raise UsageError(f"--sizes needs {args.m - 1} values for m={args.m}, got {len(tail)}")
    else:
        tail = [args.lam * (args.q + 1)] * (args.m - 1)
    eval_sets = load_eval_sets(args.eval_sets) if args.eval_sets else None
    return CodeParams.create(args.q, args.lam, tail, eval_sets)


# ============================================================================
# HANDLERS
# ============================================================================

def _cmd_field_info(args: argparse.Namespace) -> HandlerResult:
    spec = make_field(args.p, args.k)
    payload = spec.to_dict()
    payload["generator_order"] = spec.generator_order()
    payload["qplus1_solutions"] = None
    if spec.is_quadratic and spec.q % 2 == 1:
        solutions = solve_qplus1_power_eq_minus_one(spec)
        payload["q"] = spec.q
        payload["qplus1_solutions"] = sorted(x.log for x in solutions)
    return payload, 0


def _cmd_delta(args: argparse.Namespace) -> HandlerResult:
    params = _params_from_args(args)
    box = params.box
    delta = build_Delta_t(box, args.t)
    closed_form = None
    if params.m <= 3 and all(a >= args.t - 1 for a in params.sizes):
        closed_form = delta_size_closed_form(params.m, args.t)
    return {
        "q": params.q,
        "lambda": params.lam,
        "m": params.m,
        "sizes": list(params.sizes),
        "t": args.t,
        "delta_size": delta_size(box, args.t),
        "closed_form": closed_form,
        "members": [list(e) for e in delta],
        "footprint_bound": footprint_bound(delta),
    }, 0


def _cmd_construct(args: argparse.Namespace) -> HandlerResult:
    params = _params_from_args(args)
    delta = build_Delta_t(params.box, args.t)
    twist = build_twist(params)
    gm = generator_matrix(delta, twist, build_grid(params))

    if args.matrix_format == FORMAT_CSV:
        rows = gm.matrix.view(np.ndarray)
        return "\n".join(",".join(str(int(x)) for x in row) for row in rows) + "\n", 0

    n = gm.n
    logs = element_logs(gm.matrix)
    return {
        "params": params.to_dict(),
        "construction": params.construction(args.t),
        "t": args.t,
        "n": n,
        "dimension": gm.dimension,
        "exponents": [list(e) for e in delta],
        "footprint_bound": footprint_bound(delta),
        "twist": element_logs(twist.entries),
        "matrix": [logs[i * n:(i + 1) * n] for i in range(gm.dimension)],
    }, 0


def _cmd_verify(args: argparse.Namespace) -> HandlerResult:
    params = _params_from_args(args)
    if args.e0:
        delta = build_E0(params.box, params.q)
    else:
        check_t_range(args.t, params.q)
        delta = build_Delta_t(params.box, args.t)
    twist = TwistVector.ones(params) if args.untwisted else build_twist(params)

    report = check_self_orthogonal(generator_matrix(delta, twist, build_grid(params)))
    payload = report.to_dict()
    payload["construction"] = params.construction(None if args.e0 else args.t)
    payload["region"] = "E0" if args.e0 else "Delta_t"
    payload["twisted"] = not args.untwisted

    if twist.canonical and not report.gram_is_zero:
        logger.error(f"InvariantViolation: {payload['construction']} is not self-orthogonal")
        return payload, EXIT_CODES[InvariantViolation]
    return payload, 0


def _cmd_distance(args: argparse.Namespace) -> HandlerResult:
    params = _params_from_args(args)
    check_t_range(args.t, params.q)
    delta = build_Delta_t(params.box, args.t)
    twist = build_twist(params) if args.twisted else TwistVector.ones(params)
    gm = generator_matrix(delta, twist, build_grid(params))

    if args.brute_force:
        result = brute_force_dual_distance(gm)
    elif args.exact:
        result = dual_distance_by_columns(gm, args.budget)
    else:
        result = DistanceResult(value=args.t, exact=False, method=METHOD_FOOTPRINT)

    payload = result.to_dict()
    payload["construction"] = params.construction(args.t)
    return payload, 0


def _cmd_qgv(args: argparse.Namespace) -> HandlerResult:
    return qgv(args.n, args.k, args.d, args.q).to_dict(), 0


def _cmd_singleton(args: argparse.Namespace) -> HandlerResult:
    result = classify_singleton(args.n, args.k, args.d)
    payload = {"n": args.n, "k": args.k, "d": args.d}
    payload.update(result.to_dict())
    return payload, 0


def _cmd_gv_interval(args: argparse.Namespace) -> HandlerResult:
    interval = gv_interval(args.q, args.d)
    if interval is None:
        return {"q": args.q, "d": args.d, "empty": True, "n_low": None, "n_high": None,
                "admissible_lengths": []}, 0
    lengths = [n for n in admissible_lengths(args.q, 2) if interval.n_low <= n <= interval.n_high]
    payload = interval.to_dict()
    payload["empty"] = False
    payload["admissible_lengths"] = lengths
    return payload, 0


def _cmd_gv_threshold(args: argparse.Namespace) -> HandlerResult:
    threshold = qgv_scan_threshold(args.q, args.d, lengths=args.lengths)
    return {
        "q": args.q,
        "d": args.d,
        "lengths": args.lengths,
        "threshold": threshold,
        "closed_form": qgv_threshold_d3(args.q) if args.d == 3 else None,
        "n_high": (args.q * args.q - 1) ** 2,
    }, 0


def _cmd_scan(args: argparse.Namespace) -> HandlerResult:
    if args.lambda_all:
        lambdas = None
    else:
        lambdas = tuple(args.lam) if args.lam else (1,)

    spec = SweepSpec(
        q_values=tuple(args.q),
        lambdas=lambdas,
        m_values=tuple(args.m),
        a_range=(args.sizes_min, args.sizes_max),
        t_values=tuple(args.t) if args.t else None,
        filters=frozenset(args.filter or ()),
        n_max=args.n_max,
        verify_budget=args.verify_budget,
        verify_max_length=args.verify_max_length,
        check_orthogonality=not args.skip_orthogonality,
    )
    records = CatalogEngine(threads=args.threads).sweep(spec)

    if args.out:
        emit(records, args.format, args.out)
        return {"records": len(records), "out": args.out, "format": args.format}, 0
    return render(records, args.format), 0


def _cmd_tables(args: argparse.Namespace) -> HandlerResult:
    names = args.table or (CODE_TABLES + RANGE_TABLES)
    reports = reproduce_tables(
        names,
        engine=CatalogEngine(threads=args.threads),
        verify=args.verify,
        budget=args.budget,
        golden_dir=Path(args.golden_dir),
    )
    diffs = diff_report(reports)
    for diff in diffs:
        logger.error(str(diff))

    if args.diff:
        payload: Dict[str, Any] = {"clean": not diffs, "diffs": [d.to_dict() for d in diffs]}
    else:
        payload = {
            "clean": not diffs,
            "tables": {name: report.to_dict() for name, report in reports.items()},
            "diffs": [d.to_dict() for d in diffs],
        }
    return payload, EXIT_CODES[TableMismatchError] if diffs else 0


# ============================================================================
# PARSER
# ============================================================================

# JSON written to stdout by each subcommand
OUTPUT_SCHEMAS: Dict[str, str] = {
    "field-info": "{p, k, size, modulus, generator, generator_order, q, qplus1_solutions: [log]}",
    "delta": "{q, lambda, m, sizes, t, delta_size, closed_form|null, members: [[e]], footprint_bound}",
    "construct": "{params, construction, t, n, dimension, exponents, footprint_bound, "
                 "twist: [log], matrix: [[log|null]]}; csv: integer rows",
    "verify": "{gram_is_zero, predicate_all_pairs, offending_pairs, unguaranteed_pairs, rows, "
              "construction, region, twisted}",
    "distance": "{value, exact, method, work, witness|null, construction}",
    "qgv": "{n, k, d, q, lhs: str, rhs: str, beaten, preconditions_met, lhs_is_exact}",
    "singleton": "{n, k, d, defect, label}",
    "gv-interval": "{q, d, n_low|null, n_high|null, empty, admissible_lengths}",
    "gv-threshold": "{q, d, lengths, threshold, closed_form|null, n_high}",
    "scan": "[record] (json) or csv rows; with --out: {records, out, format}",
    "tables": "{clean, tables: {name: {table, rows, diffs}}, diffs}; --diff: {clean, diffs}",
}


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="gmcc",
        description="Hermitian self-orthogonal GMCCs and the quantum codes they yield.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--quiet", action="store_true", help="only warnings and errors on stderr")
    parser.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="worker threads")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def command(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(
            name, help=help_text, description=help_text, epilog=f"output: {OUTPUT_SCHEMAS[name]}"
        )
        p.set_defaults(handler=handler)
        return p

    p = command("field-info", _cmd_field_info, "canonical GF(p^k): modulus, generator, x^(q+1) = -1 solutions")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = command("delta", _cmd_delta, "members and size of Delta_t with its footprint bound")
    _add_code_arguments(p)

    p = command("construct", _cmd_construct, "generator matrix and twist vector of C_{v,Delta_t}")
    _add_code_arguments(p)
    p.add_argument("--matrix-format", choices=[FORMAT_JSON, FORMAT_CSV], default=FORMAT_JSON)

    p = command("verify", _cmd_verify, "Hermitian self-orthogonality report")
    _add_code_arguments(p, with_t=False)
    p.add_argument("--t", type=int, default=None, help="designed distance (required unless --e0)")
    p.add_argument("--untwisted", action="store_true", help="use v = 1 (negative control)")
    p.add_argument("--e0", action="store_true", help="check all of E0 instead of Delta_t")

    p = command("distance", _cmd_distance, "minimum distance of the Hermitian dual")
    _add_code_arguments(p)
    p.add_argument("--exact", action="store_true", help="exact column-dependence search")
    p.add_argument("--brute-force", action="store_true", help="exhaustive codeword enumeration")
    p.add_argument("--budget", type=int, default=DEFAULT_DISTANCE_BUDGET, help="column-search work budget")
    p.add_argument("--twisted", action="store_true", help="search the twisted matrix instead of v = 1")

    p = command("qgv", _cmd_qgv, "quantum Gilbert-Varshamov verdict")
    for flag in ("--n", "--k", "--d", "--q"):
        p.add_argument(flag, type=int, required=True)

    p = command("singleton", _cmd_singleton, "quantum Singleton defect and label")
    for flag in ("--n", "--k", "--d"):
        p.add_argument(flag, type=int, required=True)

    p = command("gv-interval", _cmd_gv_interval, "closed-form GV-beating length interval (d >= 5)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = command("gv-threshold", _cmd_gv_threshold, "smallest length from which QGV stays beaten")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lengths", choices=[LENGTHS_ADMISSIBLE, LENGTHS_ALL], default=LENGTHS_ADMISSIBLE)

    p = command("scan", _cmd_scan, "sweep parameters and emit quantum code records")
    p.add_argument("--q", type=int, nargs="+", required=True)
    p.add_argument("--lambda", dest="lam", type=int, nargs="+", default=None)
    p.add_argument("--lambda-all", action="store_true", help="every divisor of q-1")
    p.add_argument("--m", type=int, nargs="+", default=[1, 2])
    p.add_argument("--sizes-min", type=int, default=2)
    p.add_argument("--sizes-max", type=int, default=8)
    p.add_argument("--t", type=int, nargs="+", default=None)
    p.add_argument("--filter", action="append", choices=list(FILTERS))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--verify-budget", type=int, default=None)
    p.add_argument("--verify-max-length", type=int, default=TABLE_VERIFY_MAX_LENGTH)
    p.add_argument("--skip-orthogonality", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=[FORMAT_JSON, FORMAT_CSV], default=FORMAT_JSON)

    p = command("tables", _cmd_tables, "reproduce the reference tables and diff against golden files")
    p.add_argument("--table", action="append", choices=CODE_TABLES + RANGE_TABLES)
    p.add_argument("--diff", action="store_true", help="print only the diff report")
    p.add_argument("--verify", action="store_true", help="also verify exact distances of small rows")
    p.add_argument("--budget", type=int, default=TABLE_VERIFY_BUDGET)
    p.add_argument("--golden-dir", default=str(GOLDEN_DIR), help="directory of golden CSV files")

    return parser


def _write_payload(payload: Any) -> None:
    if payload is None:
        return
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    sys.stdout.flush()


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, dispatch, print the result and return the exit code.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        logger.error(f"usage error: {e}")
        return exit_code_for(e)
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    if args.command == "verify" and not args.e0 and args.t is None:
        logger.error("usage error: verify needs --t unless --e0 is given")
        return 1

    try:
        payload, code = args.handler(args)
    except GmccError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return exit_code_for(e)
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return 1
    except Exception as e:
        logger.error(f"internal error: {type(e).__name__}: {e}")
        logger.debug("traceback", exc_info=True)
        return EXIT_CODES[InvariantViolation]

    _write_payload(payload)
    return code
