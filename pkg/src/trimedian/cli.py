"""Command-line interface: ``trimedian <command> ...``.

Exit codes: 0 success, 1 a verification suite failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cevian import CircOp, pq_from_eta, to_eta
from .errors import TrimedianError
from .export import orbit_csv, orbit_json, orbit_svg, shape_trace_csv
from .figures import FIGURE_NAMES, write_figure
from .literals import parse_operator, parse_triangle, parse_trigpoly
from .median import MedianLabel, fixed_point_suite, identity_suite, median_oracle, median_op, table1_suite
from .orbit import (
    OrbitFamily,
    collision_report,
    figure8_family,
    median_figure8_family,
    median_smn_family,
    sample,
    shape_trace,
    smn_family,
    steiner_family,
    tracing_class,
    tracing_law_suite,
    tracing_residual,
    TracingClass,
)
from .shape import ExtOp, bclift_suite, ext_apply, shape

SEED_MAX = 2**64


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < SEED_MAX:
        raise argparse.ArgumentTypeError(f"seed must be in [0, 2^64), got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _fmt_scalar(x) -> str:
    if hasattr(x, "to_text"):
        return x.to_text("auto")
    x = complex(x)
    return f"{x.real:.15g}{x.imag:+.15g}i"


def _add_backend(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="exact", action="store_true", default=True, help="exact arithmetic in Q(zeta12) (default)")
    g.add_argument("--approx", dest="exact", action="store_false", help="double-precision complex arithmetic")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------------


def cmd_apply(args) -> int:
    op = parse_operator(args.operator, args.exact)
    d = parse_triangle(args.triangle, args.exact)
    result = ext_apply(op, d) if isinstance(op, ExtOp) else op(d)
    if args.format == "json":
        _emit(json.dumps({"triangle": result.to_json(), "text": str(result)}, indent=2) + "\n", args.out)
    else:
        _emit(str(result) + "\n", args.out)
    return 0


def _op_views(op: CircOp) -> dict:
    eta, etap = to_eta(op)
    views = {"abg": [_fmt_scalar(c) for c in op.coeffs], "eta": [_fmt_scalar(eta), _fmt_scalar(etap)]}
    try:
        p, q = pq_from_eta(to_eta(op))
        views["pq"] = [_fmt_scalar(p), _fmt_scalar(q)]
    except TrimedianError as exc:
        views["pq"] = None
        views["pq_note"] = str(exc)
    return views


def _print_views(views: dict, fmt: str, out) -> None:
    if fmt == "json":
        _emit(json.dumps(views, indent=2) + "\n", out)
        return
    lines = [
        "a, b, g:   " + ", ".join(views["abg"]),
        "eta, eta': " + ", ".join(views["eta"]),
        "p, q:      " + (", ".join(views["pq"]) if views["pq"] else "none (" + views.get("pq_note", "") + ")"),
    ]
    for key in ("triangle", "oracle_agrees"):
        if key in views:
            lines.append(f"{key}: {views[key]}")
    _emit("\n".join(lines) + "\n", out)


def cmd_convert(args) -> int:
    op = parse_operator(args.operator, args.exact)
    if isinstance(op, ExtOp):
        raise TrimedianError("a binary Ceva operator has no (p, q) or (eta, eta') form of its own")
    _print_views(_op_views(op), args.format, args.out)
    return 0


def cmd_median(args) -> int:
    label = MedianLabel.parse(args.label)
    cevian = parse_operator(args.operator, args.exact)
    if not isinstance(cevian, CircOp):
        raise TrimedianError("median needs a cevian operator literal S[...]")
    op = median_op(label, to_eta(cevian))
    views = _op_views(op)
    if args.triangle:
        d = parse_triangle(args.triangle, args.exact)
        result = op(d)
        oracle = median_oracle(label, d, cevian(d))
        views["triangle"] = str(result)
        views["oracle_agrees"] = oracle == result if d.exact else all(abs(complex(a) - complex(b)) <= 1e-9 for a, b in zip(oracle, result))
    _print_views(views, args.format, args.out)
    return 0


def cmd_shape(args) -> int:
    d = parse_triangle(args.triangle, args.exact)
    psi = shape(d)
    data = {"psi": str(psi), "psi_cubed": str(psi.cube())}
    if args.format == "json":
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    else:
        _emit(f"psi:   {data['psi']}\npsi^3: {data['psi_cubed']}\n", args.out)
    return 0


def _family(args) -> OrbitFamily:
    base = parse_triangle(args.base) if args.base else None
    name = args.family
    if name == "steiner":
        return steiner_family(base) if base else steiner_family()
    if name == "figure8":
        return figure8_family()
    if name == "median-figure8":
        return median_figure8_family()
    if name == "smn":
        return smn_family(args.m, args.n, base) if base else smn_family(args.m, args.n)
    if name == "median-smn":
        return median_smn_family(args.x, args.m, args.n, base) if base else median_smn_family(args.x, args.m, args.n)
    # custom
    if not (args.eta and args.eta_prime and base):
        raise TrimedianError("custom family needs --eta, --eta-prime and --base")
    label = MedianLabel.parse(args.label) if args.label else None
    return OrbitFamily(parse_trigpoly(args.eta), parse_trigpoly(args.eta_prime), base, label)


def cmd_orbit(args) -> int:
    fam = _family(args)
    pts = sample(fam, args.samples)
    cls = tracing_class(fam)
    if args.shape_trace:
        _emit(shape_trace_csv(shape_trace(pts)), args.out)
        return 0
    if args.format == "csv":
        _emit(orbit_csv(pts), args.out)
    elif args.format == "svg":
        _emit(orbit_svg(pts, base=fam.base), args.out)
    else:
        residual = None if cls is TracingClass.NOT_TRACING else tracing_residual(fam, args.samples, cls)
        extra = {
            "kind": fam.kind,
            "tracing_class": cls.value,
            "tracing_residual": residual,
            "min_vertex_distance": collision_report(pts),
        }
        _emit(orbit_json(pts, extra), args.out)
    return 0


def _run_suite(name: str, seed: int, count: int | None) -> tuple:
    if name == "identities":
        rep = identity_suite(seed, count or 100)
        return all(v["passed"] for v in rep.values()), rep
    if name == "table1":
        rep = table1_suite(seed, count or 20)
        return all(v["passed"] for v in rep.values()), rep
    if name == "fixedpoints":
        rep = fixed_point_suite()
        return rep["passed"], rep
    if name == "bclift":
        rep = bclift_suite(seed, count or 50)
        return all(v["passed"] for v in rep.values()), rep
    rep = tracing_law_suite()
    rep = {k: v for k, v in rep.items() if k != "rows"} | {"failures": [r for r in rep["rows"] if not r["ok"]]}
    return rep["passed"], rep


SUITES = ("identities", "table1", "fixedpoints", "bclift", "tracing")


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    report, ok = {}, True
    for name in names:
        passed, rep = _run_suite(name, args.seed, args.count)
        report[name] = {"passed": passed, "report": rep}
        ok = ok and passed
    report = {"passed": ok, "seed": args.seed, "suites": report}
    _emit(json.dumps(report, indent=2, sort_keys=True, default=str) + "\n", args.out)
    return 0 if ok else 1


def cmd_figure(args) -> int:
    if args.name not in FIGURE_NAMES:
        raise TrimedianError(f"unknown figure {args.name!r}; choose from {', '.join(FIGURE_NAMES)}")
    for path in write_figure(args.name, args.out, args.samples):
        print(path)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trimedian", description="Generalized cevian and median operators on triangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply an operator literal to a triangle")
    p.add_argument("operator", help="e.g. 'S[p=4/5,q=(2+4i)/3]', 'M[02/01][p=0,q=1/2]', 'H[s=2]', 'C[s=2]'")
    p.add_argument("triangle", help="e.g. '(0,1,(7+8i)/10)' or JSON [[re,im],...]")
    _add_backend(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("convert", help="show an operator as (a, b, g), (eta, eta') and (p, q)")
    p.add_argument("operator")
    _add_backend(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("median", help="median operator M^{wx/yz} over a cevian operator")
    p.add_argument("label", help="wx/yz, e.g. 00/01")
    p.add_argument("operator", help="cevian literal S[...]")
    p.add_argument("triangle", nargs="?", help="optional triangle to apply it to")
    _add_backend(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_median)

    p = sub.add_parser("shape", help="shape psi = psi2/psi1 and psi^3 of a triangle")
    p.add_argument("triangle")
    _add_backend(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("orbit", help="sample a periodic operator family")
    p.add_argument("family", choices=("steiner", "figure8", "median-figure8", "smn", "median-smn", "custom"))
    p.add_argument("--m", type=int, default=-1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--x", type=int, default=0)
    p.add_argument("--base", help="base triangle literal")
    p.add_argument("--eta", help="trig polynomial 'k:c; k:c' (custom family)")
    p.add_argument("--eta-prime", dest="eta_prime")
    p.add_argument("--label", help="median label for a custom family")
    p.add_argument("--samples", type=_positive, default=300)
    p.add_argument("--format", choices=("csv", "svg", "json"), default="csv")
    p.add_argument("--shape-trace", action="store_true", help="write t, Re, Im of psi^3 instead of vertices")
    p.add_argument("--out")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--count", type=_positive)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write CSV + SVG data for one of the eleven named figures")
    p.add_argument("name", help=", ".join(FIGURE_NAMES))
    p.add_argument("--out", default=".")
    p.add_argument("--samples", type=_positive, default=300)
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TrimedianError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
