"""Command-line front end.

Exit codes: 0 when every emitted check passes (or holds with equality),
1 when some check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import acceptance
from .catalog import CATALOG_ENTRIES, Convention, named_class
from .curves import intersect, lefschetz_pencil, parse_curve
from .picard import ClassError, IndeterminateError, class_from_json, class_to_dict
from .pushpull import push_quadratic, push_quadratic_partial
from .scalar import format_rational, render_decimal
from .theorems import (
    DerivationError,
    b10_derivation,
    check_pencil_inequality,
    check_thm1b,
    counterexample_report,
    epsilon_table,
    kodaira_slope_report,
)

DECIMALS_ENV = "MODULISLOPE_DECIMALS"
EPSILON_COLUMNS = ("g", "source", "u_g", "binding_i", "threshold", "epsilon")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str] = field(default_factory=list)
    output_format: str = "text"
    decimals: int = 4
    convention: str = "both"


def _default_decimals() -> int:
    raw = os.environ.get(DECIMALS_ENV)
    if raw is None:
        return 4
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{DECIMALS_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise InputError(f"{DECIMALS_ENV} must be non-negative")
    return value


def load_class(ref: str):
    """A class from a JSON file path, or a catalog keyword such as ``k3divisor``."""
    path = Path(ref)
    if path.is_file():
        try:
            return class_from_json(path.read_text())
        except OSError as exc:
            raise InputError(f"cannot read {ref}: {exc}") from None
    if ref.endswith(".json"):
        raise InputError(f"no such file: {ref}")
    return named_class(ref)


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def cmd_push(cfg: RunConfig, args, out) -> int:
    X, Y = load_class(args.first), load_class(args.second)
    result = push_quadratic_partial(X, Y) if args.partial else push_quadratic(X, Y)
    _emit_json(class_to_dict(result), out)
    return 0


def cmd_intersect(cfg: RunConfig, args, out) -> int:
    C = parse_curve(args.curve)
    D = load_class(args.cls)
    value = intersect(C, D)
    if cfg.output_format == "json":
        _emit_json({"curve": C.name, "value": format_rational(value)}, out)
    else:
        out.write(format_rational(value) + "\n")
    return 0


def cmd_catalog(cfg: RunConfig, args, out) -> int:
    if args.name is None:
        if cfg.output_format == "json":
            _emit_json(CATALOG_ENTRIES, out)
        else:
            for key, text in CATALOG_ENTRIES.items():
                out.write(f"{key:30} {text}\n")
        return 0
    D = named_class(args.name)
    if cfg.output_format == "json":
        _emit_json(class_to_dict(D), out)
    else:
        out.write(f"{D}\n")
    return 0


def _emit_reports(cfg: RunConfig, reports, out) -> int:
    if cfg.output_format == "json":
        _emit_json([r.to_dict() for r in reports], out)
    else:
        for r in reports:
            out.write(r.line() + "\n")
    return 0 if all(r.ok for r in reports) else 1


def cmd_verify_thm1(cfg: RunConfig, args, out) -> int:
    D = load_class(args.cls)
    if args.i == 10 and D.genus >= 20:
        report = check_thm1b(D)
    else:
        report = check_pencil_inequality(D, args.i)
    return _emit_reports(cfg, [report], out)


def cmd_bound_b10(cfg: RunConfig, args, out) -> int:
    d = b10_derivation()
    if cfg.output_format == "json":
        _emit_json({"alpha": format_rational(d.alpha), "beta": format_rational(d.beta)}, out)
        return 0
    p = cfg.decimals
    out.write(
        f"b10 >= alpha*b0 - beta*a with alpha = {format_rational(d.alpha)} "
        f"({render_decimal(d.alpha, p)}...), beta = {format_rational(d.beta)} "
        f"({render_decimal(d.beta, p)}...)\n"
    )
    lam = d.lambda_functional
    out.write(
        f"lambda coefficient of pi_*(W.E): {lam['b10']} b10 + {lam['a']} a - {-lam['m']} m\n"
    )
    for text in d.assumptions:
        out.write(f"assumption: {text}\n")
    return 0


def cmd_epsilon_table(cfg: RunConfig, args, out) -> int:
    rows = epsilon_table(args.g_from, args.g_to)
    if cfg.output_format == "json":
        _emit_json([r.to_dict() for r in rows], out)
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(EPSILON_COLUMNS)
        for r in rows:
            d = r.to_dict()
            writer.writerow([d[c] for c in EPSILON_COLUMNS])
        out.write(buf.getvalue())
    else:
        p = cfg.decimals
        out.write(f"{'g':>3}  {'source':13} {'u_g':>12}  {'i':>2}  {'threshold':>12}  {'epsilon':>10}\n")
        for r in rows:
            out.write(
                f"{r.g:>3}  {r.upper_bound_source:13} {render_decimal(r.u_g, p):>12}  "
                f"{r.binding_i:>2}  {render_decimal(r.threshold, p):>12}  "
                f"{render_decimal(r.epsilon_g, p):>10}\n"
            )
    return 0 if all(r.valid for r in rows) else 1


def cmd_counterexample(cfg: RunConfig, args, out) -> int:
    report = counterexample_report()
    if cfg.output_format == "json":
        _emit_json([report.to_dict()], out)
    else:
        out.write(f"s(K̄) = {format_rational(report.left)} < {format_rational(report.right)}\n")
        bk = intersect(lefschetz_pencil(10), named_class("k3divisor"))
        out.write(f"B·K̄ = {format_rational(bk)}\n")
    return 0 if report.ok else 1


def cmd_kodaira(cfg: RunConfig, args, out) -> int:
    convs = list(Convention) if args.convention == "both" else [Convention(args.convention)]
    reports = [kodaira_slope_report(args.g, c) for c in convs]
    if cfg.output_format == "json":
        _emit_json([r.to_dict() for r in reports], out)
    else:
        p = cfg.decimals
        for r in reports:
            out.write(
                f"g={r.g} convention={r.convention.value}: D = {r.cls}\n"
                f"  slope {format_rational(r.slope)} ({render_decimal(r.slope, p)}), "
                f"printed {format_rational(r.paper_value)} ({render_decimal(r.paper_value, p)}), "
                f"lambda match: {'yes' if r.lambda_match else 'no'}\n"
            )
    return 0 if all(r.lambda_match for r in reports) else 1


def cmd_verify_all(cfg: RunConfig, args, out) -> int:
    results, lines = acceptance.run_all(cfg.decimals)
    if cfg.output_format == "json":
        _emit_json(
            {
                "criteria": [
                    {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
                "discrepancies": lines,
            },
            out,
        )
    else:
        for r in results:
            out.write(r.line() + "\n")
        out.write("open discrepancies:\n")
        for ln in lines:
            out.write(f"  {ln}\n")
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} criteria passed\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--format", choices=("text", "json", "csv"), default=None)
    common.add_argument("--decimals", type=int, default=None, help="display precision")

    parser = argparse.ArgumentParser(
        prog="modulislope",
        description="Exact divisor-class calculus on Mbar_g and Mbar_{g,1}.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("push", parents=[common], help="pi_* of a product of two Mg1 classes")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--partial", action="store_true")
    p.set_defaults(func=cmd_push)

    p = sub.add_parser("intersect", parents=[common], help="pair a test curve with a class")
    p.add_argument("--curve", required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("catalog", parents=[common], help="list or emit named classes")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-thm1", parents=[common], help="check the b_i inequality")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_verify_thm1)

    p = sub.add_parser("bound-b10", parents=[common], help="derive the b10 bound constants")
    p.set_defaults(func=cmd_bound_b10)

    p = sub.add_parser("epsilon-table", parents=[common], help="slope thresholds per genus")
    p.add_argument("--from", dest="g_from", type=int, default=3)
    p.add_argument("--to", dest="g_to", type=int, default=23)
    p.set_defaults(func=cmd_epsilon_table)

    p = sub.add_parser("counterexample", parents=[common], help="slope of the K3 divisor")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("kodaira", parents=[common], help="slope of pi_*(K.W)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--convention", choices=("paper", "standard", "both"), default="both")
    p.set_defaults(func=cmd_kodaira)

    p = sub.add_parser("verify-all", parents=[common], help="run every acceptance criterion")
    p.set_defaults(func=cmd_verify_all)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        fmt = args.format or ("json" if args.json else "text")
        decimals = args.decimals if args.decimals is not None else _default_decimals()
        if decimals < 0:
            raise InputError("--decimals must be non-negative")
        cfg = RunConfig(
            subcommand=args.subcommand,
            inputs=[v for k, v in vars(args).items() if k in ("first", "second", "cls") and v],
            output_format=fmt,
            decimals=decimals,
            convention=getattr(args, "convention", "both"),
        )
        return args.func(cfg, args, out)
    except (InputError, ClassError, IndeterminateError, ValueError) as exc:
        err.write(f"modulislope: error: {exc}\n")
        return 2
    except DerivationError as exc:
        err.write(f"modulislope: derivation failed: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
