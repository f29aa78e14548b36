"""Command-line front-end: attractor-kit <ce-coeffs|dispersion|folds|borel>.

Emits deterministic CSV or JSON artifacts.  Exit codes: 0 success,
2 configuration error, 3 computation failure.
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
from fractions import Fraction

import numpy as np

from . import __version__
from .borel import borel_transform, pade
from .ce import (
    InvalidWeight,
    WeightModel,
    ce_coefficients,
    ratio_sequence,
)
from .dispersion import compare_methods
from .spectral import NoFoldFound, find_fold

EXIT_CONFIG = 2
EXIT_COMPUTE = 3

FOLD_N1_NOTE = (
    "n=1 fold is exactly k_c = 1/2 (discriminant of w^2 + w + k^2); "
    "the commonly quoted 0.47 appears to be a figure-read value"
)


def _fmt_float(x) -> str:
    if isinstance(x, bool):
        return "1" if x else "0"
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return "%.17g" % float(x)


def _fmt_exact(x: Fraction) -> str:
    return str(x)  # Fraction renders as "p/q" or "p"


def parse_weight(spec: str) -> WeightModel:
    if spec == "gaussian":
        return WeightModel.gaussian()
    if spec == "bounded-uniform":
        return WeightModel.bounded_uniform()
    if spec.startswith("bounded-custom="):
        path = spec.split("=", 1)[1]
        with open(path, "r", encoding="utf-8") as fh:
            moments = [
                Fraction(line.strip())
                for line in fh
                if line.strip() and not line.startswith("#")
            ]
        return WeightModel.bounded_custom(moments)
    raise argparse.ArgumentTypeError(
        f"unknown weight {spec!r}; use gaussian, bounded-uniform, "
        "or bounded-custom=FILE"
    )


def _write_atomic(path: str, data: bytes) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".attractor-kit-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(args, command: str, columns: list, rows: list, notes: list) -> None:
    """Serialize one result table as CSV or JSON, atomically."""
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(
                [c if isinstance(c, str) else _fmt_float(c) for c in row]
            )
        data = buf.getvalue().encode("utf-8")
    else:
        payload = {
            "command": command,
            "config": {
                k: v
                for k, v in sorted(vars(args).items())
                if k not in ("func", "out")  # out path is not part of the result
                and isinstance(v, (str, int, float, bool, list, type(None)))
            },
            "columns": columns,
            "rows": [
                [None if isinstance(c, float) and math.isnan(c) else c for c in row]
                for row in rows
            ],
            "notes": notes,
        }
        data = (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if args.out == "-":
        sys.stdout.write(data.decode("utf-8"))
    else:
        _write_atomic(args.out, data)


def cmd_ce_coeffs(args) -> int:
    w = parse_weight(args.weight)
    coeffs = ce_coefficients(w, args.n_max)
    ratios = ratio_sequence(coeffs) if len(coeffs) >= 2 else []
    columns = ["n", "a_2n", "abs_log10", "r_n", "r_n_over_2np1"]
    rows = []
    for n, a in enumerate(coeffs.values, 1):
        r = ratios[n - 1] if n - 1 < len(ratios) else math.nan
        rows.append(
            [
                str(n),
                _fmt_exact(a),
                _fmt_float(math.log10(abs(a)) if a != 0 else math.nan),
                _fmt_float(r),
                _fmt_float(r / (2 * (n + 1)) if not math.isnan(r) else r),
            ]
        )
    emit(args, "ce-coeffs", columns, rows, [])
    return 0


def cmd_dispersion(args) -> int:
    ks = list(np.arange(args.k_min, args.k_max + args.k_step / 2, args.k_step))
    branch_orders = args.n_list
    table = compare_methods(ks, branch_orders, args.pade[0], args.pade[1])
    columns = list(table.columns)
    rows = []
    for i in range(len(ks)):
        rows.append([table.columns[name][i] for name in columns])
    emit(args, "dispersion", columns, rows, [])
    return 0


def cmd_folds(args) -> int:
    columns = ["n", "k_c", "omega_c", "residual", "note"]
    rows, notes = [], []
    for n in args.n_list:
        note = FOLD_N1_NOTE if n == 1 else ""
        try:
            fp = find_fold(n)
            rows.append([str(n), fp.k_c, fp.omega_c, fp.residual, note])
        except NoFoldFound as exc:
            rows.append([str(n), math.nan, math.nan, math.nan, f"no fold: {exc}"])
        if note:
            notes.append(note)
    emit(args, "folds", columns, rows, notes)
    return 0


def cmd_borel(args) -> int:
    w = parse_weight(args.weight)
    L, M = args.pade
    n_coeffs = max(args.n_max, L + M + 1)
    coeffs = ce_coefficients(w, n_coeffs)
    b = borel_transform(coeffs)
    taylor = b.taylor()
    approx = pade(taylor[: L + M + 1], L, M)

    columns = ["row_type", "index", "b_n_exact", "re", "im", "abs_residue", "note"]
    rows = []
    for n, bn in enumerate(b.coeffs, 1):
        rows.append(["coeff", str(n), _fmt_exact(bn), "", "", "", ""])
    physical = []
    for p, r in zip(approx.poles, approx.residues):
        spurious = abs(r) <= 1e-8
        if not spurious:
            physical.append(p)
        rows.append(
            [
                "pole",
                "",
                "",
                _fmt_float(p.real),
                _fmt_float(p.imag),
                _fmt_float(abs(r)),
                "spurious" if spurious else "",
            ]
        )
    notes = []
    if physical:
        nearest = min(physical, key=abs)
        dist = abs(nearest - (-0.5))
        rows.append(
            ["summary", "", "", _fmt_float(nearest.real), _fmt_float(nearest.imag),
             "", f"nearest pole; |pole-(-1/2)| = {_fmt_float(dist)}"]
        )
        strict = all(p.real < 0 for p in physical)
        flag = "strict" if strict else "obstructed"
        rows.append(["summary", "", "", "", "", "", f"summability: {flag}"])
        notes.append(f"summability: {flag}")
    emit(args, "borel", columns, rows, notes)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="attractor-kit",
        description="Exact gradient-expansion coefficients, Borel-Pade "
        "resummation, and spectral branches of the 1D BGK attractor.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight=True, nmax=True, pade_opt=False, grid=False, nlist=None):
        if weight:
            p.add_argument("--weight", default="gaussian",
                           help="gaussian | bounded-uniform | bounded-custom=FILE")
        if nmax:
            p.add_argument("--n-max", type=int, default=30, dest="n_max")
        if pade_opt:
            p.add_argument("--pade", type=int, nargs=2, default=[14, 14],
                           metavar=("L", "M"))
        if grid:
            p.add_argument("--k-min", type=float, default=0.0, dest="k_min")
            p.add_argument("--k-max", type=float, default=1.2, dest="k_max")
            p.add_argument("--k-step", type=float, default=0.01, dest="k_step")
        if nlist is not None:
            p.add_argument("--n-list", default=nlist, dest="n_list",
                           type=lambda s: [int(v) for v in s.split(",")])
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default="-", help="output path ('-' = stdout)")

    p = sub.add_parser("ce-coeffs", help="exact coefficients a_2n and ratios")
    common(p)
    p.set_defaults(func=cmd_ce_coeffs)

    p = sub.add_parser("dispersion", help="omega(k) by every method")
    common(p, weight=False, nmax=False, pade_opt=True, grid=True,
           nlist=[1, 2, 20, 50])
    p.set_defaults(func=cmd_dispersion)

    p = sub.add_parser("folds", help="fold points k_c(n) of the branches")
    common(p, weight=False, nmax=False, nlist=[1, 2, 20, 50])
    p.set_defaults(func=cmd_folds)

    p = sub.add_parser("borel", help="Borel coefficients and Pade poles")
    common(p, pade_opt=True)
    p.set_defaults(func=cmd_borel)
    return parser


def validate(args) -> None:
    if getattr(args, "n_max", 1) < 1 or getattr(args, "n_max", 1) > 200:
        raise ValueError("--n-max must be in 1..200")
    if hasattr(args, "n_list") and (not args.n_list or min(args.n_list) < 1):
        raise ValueError("--n-list entries must be >= 1")
    if hasattr(args, "pade") and (args.pade[0] < 0 or args.pade[1] < 0):
        raise ValueError("--pade orders must be non-negative")
    if hasattr(args, "k_step"):
        if args.k_step <= 0 or args.k_min < 0 or args.k_max < args.k_min:
            raise ValueError("k grid must satisfy 0 <= k-min <= k-max, k-step > 0")
        if args.k_max > 1.2:
            raise ValueError("k-max capped at 1.2")
    if getattr(args, "weight", None) is not None:
        parse_weight(args.weight)  # fail early on bad weight specs


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        validate(args)
    except (ValueError, InvalidWeight, OSError, argparse.ArgumentTypeError) as exc:
        print(f"attractor-kit: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return args.func(args)
    except Exception as exc:
        print(f"attractor-kit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
