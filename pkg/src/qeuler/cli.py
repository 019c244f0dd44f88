"""Command-line surface: exact JSON reports over the library routes.

Every number in the output is an exact rational string ("p/q" or "p");
no floating point is emitted anywhere.  Output is deterministic byte
for byte for a fixed invocation: the envelope carries only the tool
name and version, never timestamps.

Exit codes: 0 all checks passed, 1 a verification produced witnesses,
2 usage or configuration error (including inputs whose preconditions
fail mid-computation, like non-quasi-definite moments).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__, convexity, families, jacobi, riordan, series
from .algebra import QPoly, parse_rational
from .families import Family, FamilySpec

__all__ = ["main"]


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qeuler",
        description="Exact q-Eulerian polynomials: generating functions, "
        "continued fractions, enumeration, convexity.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    common.add_argument(
        "--out",
        metavar="FILE",
        help="write output to FILE instead of stdout "
        "(QEULER_OUT_DIR prefixes relative paths)",
    )
    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument(
        "--family",
        required=True,
        choices=[f.value for f in Family],
        help="polynomial family",
    )
    fam.add_argument("--t", type=_rational, help="t parameter (qt families)")
    fam.add_argument("--a", type=_rational, help="a parameter (General)")
    fam.add_argument("--d", type=_rational, help="d parameter (General)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common, fam], help="polynomial rows by one route")
    p.add_argument("--nmax", type=_positive_int, required=True, help="number of rows (n = 0..nmax-1)")
    p.add_argument(
        "--route",
        required=True,
        choices=("egf", "cfrac", "enum", "recurrence"),
        help="which computation produces the rows",
    )

    p = sub.add_parser("cfrac", parents=[common, fam], help="continued-fraction weights")
    p.add_argument("--depth", type=_positive_int, default=8, help="number of s weights")

    p = sub.add_parser("prodmat", parents=[common, fam], help="production matrix of the Riordan array")
    p.add_argument("--order", type=_positive_int, required=True, help="series truncation order")

    p = sub.add_parser("check", parents=[common, fam], help="convexity verdicts with witnesses")
    p.add_argument("--nmax", type=_positive_int, help="how many polynomials (qlcx/strong)")
    p.add_argument(
        "--mode", required=True, choices=("qlcx", "strong", "zhu"), help="which check to run"
    )
    p.add_argument("--imax", type=_positive_int, default=50, help="index range for --mode zhu")

    p = sub.add_parser("conjecture", parents=[common], help="triangle transform log-convexity evidence")
    p.add_argument("--triangle", required=True, choices=("A", "B"))
    p.add_argument(
        "--seq",
        required=True,
        help="builtin name (%s) or a JSON file of rationals"
        % ", ".join(sorted(convexity.BUILTIN_SEQUENCES)),
    )
    p.add_argument("--nmax", type=_positive_int, default=12, help="test z_1..z_{nmax-1}")

    p = sub.add_parser("invert-moments", parents=[common], help="moments back to J-fraction weights")
    p.add_argument("--family", choices=[f.value for f in Family], help="take moments from a family")
    p.add_argument("--t", type=_rational)
    p.add_argument("--a", type=_rational)
    p.add_argument("--d", type=_rational)
    p.add_argument("--nmax", type=_positive_int, help="number of family moments to generate")
    p.add_argument("--file", help="JSON moment sequence instead of a family")
    p.add_argument("--depth", type=_positive_int, help="inversion depth (default: moments//2)")

    p = sub.add_parser("selftest", parents=[common], help="three-way agreement matrix at default caps")
    p.add_argument("--nmax", type=_positive_int, help="clamp the per-family caps")

    return parser


def _family_spec(args) -> FamilySpec:
    kwargs = {}
    for name in ("t", "a", "d"):
        value = getattr(args, name, None)
        if value is not None:
            kwargs[name] = value
    return FamilySpec(Family(args.family), **kwargs)


def _spec_config(spec: FamilySpec) -> dict:
    cfg: dict = {"family": spec.family.value}
    if spec.t is not None:
        cfg["t"] = str(spec.t)
    if spec.a is not None:
        cfg["a"] = str(spec.a)
        cfg["d"] = str(spec.d)
    return cfg


def _table_rows(spec: FamilySpec, route: str, count: int) -> list[QPoly]:
    a, b, d = families.family_egf_params(spec)
    if route == "egf":
        return series.egf_polynomials(a, b, d, count)
    if route == "cfrac":
        jf = jacobi.jfraction_from_params(a, b, d, count)
        return list(jacobi.moments_by_cfrac_expansion(jf, count).mu)
    if route == "enum":
        return [families.enumeration_polynomial(spec, n) for n in range(count)]
    return [families.recurrence_polynomial(spec, n) for n in range(count)]


def _cmd_table(args):
    spec = _family_spec(args)
    rows = _table_rows(spec, args.route, args.nmax)
    config = _spec_config(spec) | {"nmax": args.nmax, "route": args.route}
    result = {"rows": [p.to_json() for p in rows]}
    lines = [f"{spec.label()} via {args.route}"]
    lines += [f"  n={n}: {p}" for n, p in enumerate(rows)]
    return config, result, True, lines


def _cmd_cfrac(args):
    spec = _family_spec(args)
    a, b, d = families.family_egf_params(spec)
    jf = jacobi.jfraction_from_params(a, b, d, args.depth)
    config = _spec_config(spec) | {"depth": args.depth}
    lines = [f"{spec.label()} continued-fraction weights"]
    lines += [f"  s_{i} = {p}" for i, p in enumerate(jf.s)]
    lines += [f"  t_{i} = {p}" for i, p in enumerate(jf.t, start=1)]
    return config, {"jfraction": jf.to_json()}, True, lines


def _cmd_prodmat(args):
    spec = _family_spec(args)
    a, b, d = families.family_egf_params(spec)
    arr = riordan.exp_riordan_from_params(a, b, d, args.order)
    prod = riordan.production_matrix_direct(riordan.riordan_matrix(arr))
    config = _spec_config(spec) | {"order": args.order}
    result: dict = {"tridiagonal": prod.tridiagonal}
    lines = [f"{spec.label()} production matrix, order {args.order}",
             f"  tridiagonal: {prod.tridiagonal}"]
    if prod.tridiagonal:
        s = prod.s_values(prod.nrows)
        t = prod.t_values(prod.nrows - 1)
        result["s"] = [p.to_json() for p in s]
        result["t"] = [p.to_json() for p in t]
        lines += [f"  s_{i} = {p}" for i, p in enumerate(s)]
        lines += [f"  t_{i} = {p}" for i, p in enumerate(t, start=1)]
    else:
        result["entries"] = prod.to_json()["entries"]
        lines.append("  (not tridiagonal; full entries in JSON output)")
    return config, result, True, lines


def _cmd_check(args):
    spec = _family_spec(args)
    a, b, d = families.family_egf_params(spec)
    config = _spec_config(spec) | {"mode": args.mode}
    if args.mode == "zhu":
        jf = jacobi.jfraction_from_params(a, b, d, args.imax + 2)
        report = convexity.moment_convexity_criterion(jf, args.imax)
        config["imax"] = args.imax
    else:
        if args.nmax is None:
            raise ValueError("--nmax is required for --mode qlcx/strong")
        depth = max(1, (args.nmax - 1) // 2 + 1)
        jf = jacobi.jfraction_from_params(a, b, d, depth)
        mu = jacobi.moments_by_motzkin_paths(jf, args.nmax)
        config["nmax"] = args.nmax
        if args.mode == "qlcx":
            report = convexity.check_q_log_convex(list(mu.mu))
        else:
            report = convexity.check_strong_q_log_convex(list(mu.mu))
    lines = [f"{spec.label()} {args.mode}: {'pass' if report.verdict else 'FAIL'}"]
    for w in report.witnesses:
        lines.append(f"  witness {w}")
    return config, {"report": report.to_json()}, report.verdict, lines


def _load_sequence(seq: str, count: int) -> list[Fraction]:
    if seq in convexity.BUILTIN_SEQUENCES:
        return convexity.builtin_sequence(seq, count)
    if not os.path.exists(seq):
        raise ValueError(
            f"{seq!r} is neither a builtin sequence "
            f"({', '.join(sorted(convexity.BUILTIN_SEQUENCES))}) nor a file"
        )
    with open(seq, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("x")
    if not isinstance(data, list):
        raise ValueError("sequence file must hold a JSON array (or {'x': [...]})")
    return [parse_rational(v) if isinstance(v, str) else Fraction(v) for v in data]


def _cmd_conjecture(args):
    triangle = (
        convexity.Triangle.EULERIAN_A if args.triangle == "A" else convexity.Triangle.EULERIAN_B
    )
    xs = _load_sequence(args.seq, args.nmax + 1)
    report = convexity.transform_log_convexity_experiment(triangle, xs, args.nmax)
    config = {"triangle": args.triangle, "seq": args.seq, "nmax": args.nmax}
    result = {
        "input": [str(v) for v in xs[: args.nmax + 1]],
        "report": report.to_json(),
    }
    lines = [
        f"triangle {args.triangle} applied to {args.seq}: "
        f"{'log-convexity preserved' if report.verdict else 'WITNESSES FOUND'}",
        "  z = " + ", ".join(str(v) for v in report.z),
    ]
    for n in report.witnesses:
        lines.append(f"  witness n={n}")
    return config, result, report.verdict, lines


def _moments_from_file(path: str) -> jacobi.MomentSeq:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("mu")
    if not isinstance(data, list):
        raise ValueError("moment file must hold a JSON array (or {'mu': [...]})")
    polys = []
    for entry in data:
        if isinstance(entry, list):
            polys.append(QPoly.from_json(entry))
        elif isinstance(entry, str):
            polys.append(QPoly(parse_rational(entry)))
        else:
            polys.append(QPoly(Fraction(entry)))
    return jacobi.MomentSeq(tuple(polys))


def _cmd_invert_moments(args):
    if args.file and args.family:
        raise ValueError("give either --file or --family, not both")
    if args.file:
        moments = _moments_from_file(args.file)
        config: dict = {"file": args.file}
    elif args.family:
        if args.nmax is None:
            raise ValueError("--nmax is required with --family")
        spec = _family_spec(args)
        a, b, d = families.family_egf_params(spec)
        jf = jacobi.jfraction_from_params(a, b, d, args.nmax)
        moments = jacobi.moments_by_motzkin_paths(jf, args.nmax)
        config = _spec_config(spec) | {"nmax": args.nmax}
    else:
        raise ValueError("one of --file or --family is required")
    recovered = jacobi.jfraction_from_moments(moments, args.depth)
    config["depth"] = recovered.depth
    lines = [f"recovered J-fraction of depth {recovered.depth}"]
    lines += [f"  s_{i} = {p}" for i, p in enumerate(recovered.s)]
    lines += [f"  t_{i} = {p}" for i, p in enumerate(recovered.t, start=1)]
    return config, {"jfraction": recovered.to_json()}, True, lines


_T_GRID = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3))
_GENERAL_GRID = ((1, 1), (1, 2), (1, 3), (2, 5), (0, 1))


def _selftest_instances(clamp: int | None) -> list[tuple[FamilySpec, int]]:
    def cap(value: int) -> int:
        return min(value, clamp) if clamp else value

    out: list[tuple[FamilySpec, int]] = [
        (FamilySpec(Family.TYPE_A_SHIFTED), cap(families.DESCENT_CAP)),
        (FamilySpec(Family.TYPE_A), cap(families.DESCENT_CAP)),
    ]
    out += [(FamilySpec(Family.TYPE_A_QT, t=t), cap(families.DESCENT_CAP)) for t in _T_GRID]
    out.append((FamilySpec(Family.TYPE_B), cap(families.SIGNED_CAP)))
    out += [(FamilySpec(Family.TYPE_B_QT, t=t), cap(families.SIGNED_CAP)) for t in _T_GRID]
    out += [
        (FamilySpec(Family.GENERAL, a=Fraction(a), d=Fraction(d)), cap(10))
        for a, d in _GENERAL_GRID
    ]
    return out


def _cmd_selftest(args):
    matrix: list[dict] = []
    all_pass = True
    for spec, ncap in _selftest_instances(args.nmax):
        count = ncap + 1
        a, b, d = families.family_egf_params(spec)
        egf = series.egf_polynomials(a, b, d, count)
        jf = jacobi.jfraction_from_params(a, b, d, count)
        cfrac = list(jacobi.moments_by_cfrac_expansion(jf, count).mu)
        motzkin = list(jacobi.moments_by_motzkin_paths(jf, count).mu)
        enum = [families.enumeration_polynomial(spec, n) for n in range(count)]
        label = spec.label()
        for n in range(count):
            for pair, okay in (
                ("egf=cfrac", egf[n] == cfrac[n]),
                ("cfrac=motzkin", cfrac[n] == motzkin[n]),
                ("enum=egf", enum[n] == egf[n]),
            ):
                matrix.append({"family": label, "n": n, "pair": pair, "pass": okay})
                all_pass = all_pass and okay
    config = {"nmax": args.nmax} if args.nmax else {}
    result = {"all_pass": all_pass, "checks": len(matrix), "matrix": matrix}
    failures = [row for row in matrix if not row["pass"]]
    lines = [f"selftest: {len(matrix) - len(failures)}/{len(matrix)} checks passed"]
    lines += [f"  FAIL {row['family']} n={row['n']} {row['pair']}" for row in failures]
    return config, result, all_pass, lines


_HANDLERS = {
    "table": _cmd_table,
    "cfrac": _cmd_cfrac,
    "prodmat": _cmd_prodmat,
    "check": _cmd_check,
    "conjecture": _cmd_conjecture,
    "invert-moments": _cmd_invert_moments,
    "selftest": _cmd_selftest,
}


def _emit(text: str, out: str | None) -> None:
    if out:
        base = os.environ.get("QEULER_OUT_DIR")
        path = os.path.join(base, out) if base and not os.path.isabs(out) else out
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 2 if code is None else int(code)
    try:
        config, result, okay, lines = _HANDLERS[args.command](args)
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 2
    if args.format == "text":
        _emit("\n".join(lines), args.out)
    else:
        envelope = {
            "meta": {"tool": "qeuler", "version": __version__},
            "command": args.command,
            "config": config,
            "result": result,
        }
        _emit(json.dumps(envelope, indent=2), args.out)
    return 0 if okay else 1
