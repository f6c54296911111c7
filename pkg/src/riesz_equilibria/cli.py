"""Command-line front end.

Subcommands: ``eval``, ``equilibria``, ``scan`` and ``verify``. Exit codes are
0 on success, 1 when a verification check fails, 2 for bad arguments or domain
violations, and 3 for numerical failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import verification
from .charges import PolarPoint, regular_polygon
from .errors import DomainError, InconsistencyError
from .experiments import continuation_beta1, sweep_beta, sweep_n
from .potential import closed_form_beta1, potential_direct
from .solver import SolverOptions, enumerate_equilibria
from .specfun import build_rule, default_node_count, integral_potential

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_NUMERIC = 0, 1, 2, 3

SCAN_HEADER = ["n", "beta", "r_star", "roots_per_bisector", "r_lower", "r_upper", "residual"]


def _emit(text, stream=None):
    (stream or sys.stdout).write(text if text.endswith("\n") else text + "\n")


def _csv_text(header, rows, footer=None):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    if footer:
        buf.write(footer + "\n")
    return buf.getvalue()


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".scan-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_eval(args):
    theta = math.radians(args.theta) if args.degrees else args.theta
    cfg = regular_polygon(args.n)
    p = PolarPoint(args.r, theta)
    if args.method == "direct":
        value = potential_direct(cfg, args.beta, p)
    elif args.method == "integral":
        nodes = default_node_count() if args.nodes is None else args.nodes
        value = integral_potential(cfg, args.beta, p, build_rule(args.beta, nodes))
    else:
        if args.beta != 1.0:
            raise DomainError(f"closed form needs beta = 1, got {args.beta}")
        value = closed_form_beta1(cfg, p)
    if not math.isfinite(value):
        raise FloatingPointError(f"non-finite potential value {value}")
    out = {"n": args.n, "beta": args.beta, "r": args.r, "theta": theta, "method": args.method, "value": value}
    _emit(json.dumps(out))
    return EXIT_OK


def cmd_equilibria(args):
    eq = enumerate_equilibria(args.n, args.beta, SolverOptions(tol=args.tol))
    if args.format == "json":
        out = {
            "n": args.n,
            "beta": args.beta,
            "count": eq.count,
            "maxwell_bound": eq.maxwell_bound,
            "equilibria": [
                {"r": p.r, "theta": p.theta, "type": p.classification.value, "residual": p.residual}
                for p in eq.points
            ],
        }
        _emit(json.dumps(out))
    else:
        rows = [[args.n, repr(args.beta), repr(p.r), repr(p.theta), p.classification.value, repr(p.residual)]
                for p in eq.points]
        _emit(_csv_text(["n", "beta", "r", "theta", "type", "residual"], rows))
    return EXIT_OK


def _grid(args, integer=False):
    if args.list:
        try:
            values = [int(v) if integer else float(v) for v in args.list.split(",") if v.strip()]
        except ValueError:
            raise DomainError(f"could not parse --list {args.list!r}") from None
    elif args.start is not None and args.stop is not None:
        if integer:
            values = list(range(int(args.start), int(args.stop) + 1))
        else:
            if args.steps is None or args.steps < 1:
                raise DomainError("--steps must be a positive integer")
            # 15 significant digits strip linspace rounding noise such as 0.30000000000000004
            values = [float(f"{v:.15g}") for v in np.linspace(args.start, args.stop, args.steps)]
    else:
        raise DomainError("give either --list or --from/--to")
    if not values:
        raise DomainError("empty grid")
    return values


def _record_row(rec):
    return [rec.n, repr(rec.beta), repr(rec.r_star), rec.roots_per_bisector,
            repr(rec.r_lower), repr(rec.r_upper), repr(rec.residual)]


def cmd_scan(args):
    footer = None
    if args.mode == "n":
        if args.beta is None:
            raise DomainError("--mode n needs --beta")
        records = sweep_n(args.beta, _grid(args, integer=True), workers=args.workers)
    elif args.mode == "beta":
        if args.n is None:
            raise DomainError("--mode beta needs --n")
        records = sweep_beta(args.n, _grid(args), workers=args.workers)
    else:
        if args.n is None:
            raise DomainError("--mode continuation needs --n")
        res = continuation_beta1(args.n, args.half_width, args.step)
        records = res.records
        footer = (f"# uniform_count={str(res.uniform_count).lower()},beta_lo={res.beta_lo!r},"
                  f"beta_hi={res.beta_hi!r},tracking_mismatch={res.tracking_mismatch!r}")
    text = _csv_text(SCAN_HEADER, [_record_row(r) for r in records], footer)
    _write_atomic(args.out, text)
    return EXIT_OK


def cmd_verify(args):
    checks = verification.run(args.suite, args.tol)
    for c in checks:
        _emit(c.line())
    return EXIT_VERIFY if any(c.status == "FAIL" for c in checks) else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="riesz-equilibria",
                                     description="Equilibria of the Riesz potential of a regular n-gon of charges.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate U_beta(r, theta)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--r", type=float, default=0.0)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--degrees", action="store_true", help="read --theta in degrees")
    p.add_argument("--method", choices=["direct", "integral", "closed"], default="direct")
    p.add_argument("--nodes", type=int, default=None,
                   help="quadrature nodes for --method integral (default: RIESZ_QUAD_NODES or 96)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("equilibria", help="enumerate all equilibrium points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_equilibria)

    p = sub.add_parser("scan", help="parameter sweep written to CSV")
    p.add_argument("--mode", choices=["n", "beta", "continuation"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--beta", type=float)
    p.add_argument("--from", dest="start", type=float)
    p.add_argument("--to", dest="stop", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--list", help="comma-separated grid values")
    p.add_argument("--half-width", type=float, default=0.1)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the numerical verification suites")
    p.add_argument("--suite", choices=["all", *verification.SUITES], default="all")
    p.add_argument("--tol", type=float, default=None, help="override the residual tolerance")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InconsistencyError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
