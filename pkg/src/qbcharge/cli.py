"""
Command-line front end.

    qb su2 --n 100 --d 3 --alpha1 1 --alpha2 0
    qb parallel --k 0,1,0
    qb tridiag --b "1,2,1"
    qb tridiag3 --lambda1 3 --lambda2 1
    qb hybrid --n 6 --d 2 [--emit-state psi.json]
    qb sweep --n 100 --m-max 5 --n-max 5 --out sweep.csv
    qb oracle --state f.json
    qb thm1 --state f.json
    qb thm2 --n 6 --d 2

Exit codes: 0 success, 1 error, 2 conjecture falsified, 64 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from dataclasses import asdict

from . import io as qio
from .config import DEFAULT, Tolerances
from .entdepth import exact_depth, pair_product, thm1_bound
from .errors import QBError
from .harness import (
    CSV_COLUMNS,
    DEFAULT_GRID,
    FALSIFIED,
    conjecture_audit,
    figure_sweep,
    report,
    thm2_check,
)
from .schemes import (
    HybridSpec,
    ParallelSpec,
    SU2Spec,
    TridiagSpec,
    build_hybrid,
    build_parallel,
    build_su2,
    build_tridiag,
    build_tridiag3,
)

EXIT_OK, EXIT_ERROR, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=_positive_int, default=DEFAULT_GRID,
                        help="time points for pair-weight scans")
    common.add_argument("--tol", type=float, default=None, help="full-charging tolerance")
    common.add_argument("--purity-tol", type=float, default=None)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--threads", type=_positive_int, default=1)

    parser = _Parser(prog="qb", description="Quantum battery charging-rate and entanglement-depth tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("su2", parents=[common], help="SU(2) ladder scheme")
    p.add_argument("--n", type=_positive_int, default=None)
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--alpha1", type=float, default=1.0)
    p.add_argument("--alpha2", type=float, default=0.0)
    p.add_argument("--alpha3", type=float, default=0.0)

    p = sub.add_parser("parallel", parents=[common], help="independent local charging")
    p.add_argument("--k", type=_int_list, required=True)
    p.add_argument("--n", type=_positive_int, default=None)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--theta", type=float, default=0.0)

    p = sub.add_parser("tridiag", parents=[common], help="tridiagonal ladder")
    p.add_argument("--b", type=_float_list, required=True)
    p.add_argument("--n", type=_positive_int, default=None)

    p = sub.add_parser("tridiag3", parents=[common], help="four-level mirror-symmetric ladder")
    p.add_argument("--lambda1", type=float, required=True)
    p.add_argument("--lambda2", type=float, required=True)
    p.add_argument("--n", type=_positive_int, default=None)

    p = sub.add_parser("hybrid", parents=[common], help="block-flip scheme with k-body terms")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--emit-state", default=None, metavar="FILE",
                   help="write the evolved register state to FILE")
    p.add_argument("--t", type=float, default=None, help="time for --emit-state (default T/2)")

    p = sub.add_parser("sweep", parents=[common], help="four-level ratio sweep")
    p.add_argument("--n", type=_positive_int, default=100)
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--n-max", type=int, default=5)

    p = sub.add_parser("oracle", parents=[common], help="exact depth of a stored state")
    p.add_argument("--state", required=True)

    p = sub.add_parser("thm1", parents=[common], help="pair-weight depth bound of a stored state")
    p.add_argument("--state", required=True)

    p = sub.add_parser("thm2", parents=[common], help="block-flip tightness check")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--oracle-grid", type=_positive_int, default=17)
    return parser


def _tolerances(args) -> Tolerances:
    changes = {}
    if args.tol is not None:
        changes["full_charging"] = args.tol
    if args.purity_tol is not None:
        changes["purity"] = args.purity_tol
    return dataclasses.replace(DEFAULT, **changes)


def _output_format(args) -> str:
    if args.format:
        return args.format
    if args.out and args.out.lower().endswith(".csv"):
        return "csv"
    return "json"


def emit(payload, fmt: str, destination=None, header=None) -> None:
    """Write ``payload`` (dict, or list of records for CSV) to a file or stdout."""
    if fmt == "csv":
        if header is None:
            if isinstance(payload, dict):
                header, records = list(payload), [tuple(payload.values())]
            else:
                raise ValueError("CSV output needs a header")
        else:
            records = payload
        text = qio.rows_to_csv(header, records)
    else:
        text = qio.dumps(payload)
    if destination:
        with open(destination, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _scheme_from_args(args, tol: Tolerances):
    cmd = args.command
    if cmd == "su2":
        return build_su2(SU2Spec(args.d, args.alpha1, args.alpha2, args.alpha3), args.n, tol)
    if cmd == "parallel":
        n = args.n if args.n is not None else len(args.k)
        return build_parallel(ParallelSpec(n, tuple(args.k), args.alpha, args.theta))
    if cmd == "tridiag":
        return build_tridiag(TridiagSpec(tuple(args.b)), args.n, tol)
    if cmd == "tridiag3":
        return build_tridiag3(args.lambda1, args.lambda2, args.n, tol)
    if cmd == "hybrid":
        return build_hybrid(HybridSpec(args.n, args.d, args.theta), tol)
    raise AssertionError(cmd)


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _dispatch(args) -> int:
    tol = _tolerances(args)
    fmt = _output_format(args)
    cmd = args.command

    if cmd in ("su2", "parallel", "tridiag", "tridiag3", "hybrid"):
        scheme = _scheme_from_args(args, tol)
        rep = report(scheme, grid=args.grid, tol=tol)
        emit(rep.to_dict(), fmt, args.out)
        if cmd == "hybrid" and args.emit_state:
            t = rep.T / 2 if args.t is None else args.t
            qio.save_state(args.emit_state, scheme.full_state(t))
        return EXIT_FALSIFIED if rep.status == FALSIFIED else EXIT_OK

    if cmd == "sweep":
        rows = figure_sweep(args.n, args.m_max, args.n_max, grid=args.grid,
                            threads=args.threads, tol=tol)
        if fmt == "csv":
            emit([r.csv_record() for r in rows], "csv", args.out, header=CSV_COLUMNS)
        else:
            emit({"rows": [asdict(r) for r in rows]}, "json", args.out)
        return EXIT_FALSIFIED if conjecture_audit(rows).falsified else EXIT_OK

    if cmd == "oracle":
        psi = qio.load_state(args.state)
        res = exact_depth(psi, tol)
        n = int(round(math.log2(psi.shape[0])))
        emit({"N": n, "depth": res.depth, "separability": res.separability,
              "witness": [list(b) for b in res.witness]}, fmt, args.out)
        return EXIT_OK

    if cmd == "thm1":
        psi = qio.load_state(args.state)
        n = int(round(math.log2(psi.shape[0])))
        pc = pair_product(psi, n)
        emit({"N": n, "p0": _complex_pair(pc.p0), "pbar": _complex_pair(pc.pbar),
              "product": pc.product, "bound": thm1_bound(n, pc.product, tol)}, fmt, args.out)
        return EXIT_OK

    if cmd == "thm2":
        res = thm2_check(args.n, args.d, grid=args.oracle_grid, tol=tol)
        emit(asdict(res), fmt, args.out)
        return EXIT_OK if res.passed else EXIT_ERROR

    raise AssertionError(cmd)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"qb: {exc}", file=sys.stderr)
        print(__doc__, file=sys.stderr)
        return EXIT_USAGE
    try:
        return _dispatch(args)
    except (QBError, OSError, ValueError) as exc:
        print(f"qb: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
