"""Command-line interface.

Exit codes: 0 when every requested check passes, 1 when a check fails (or a
contraction is not well defined), 2 on usage errors.
"""

import argparse
import json
import sys
import time

from ..algebras.export import algebra_to_json, algebra_to_latex, series_to_json
from ..algebras.hopf import verify_hopf
from ..algebras.registry import algebra_names, get_algebra
from ..errors import (ExprSyntaxError, JordanianError, NoSuchForm,
                      UnknownAlgebra, UnknownGenerator)
from ..kernel.display import format_latex

REPORT_SCHEMA = "jordanian.report/1"
ALL_CHECKS = ("hopf", "quasitri", "intertwiner", "qybe", "triangular")


class UsageError(Exception):
    pass


def _order(args, algebra):
    from ..rmatrix import default_order
    return args.order if args.order is not None else default_order(algebra)


def _emit(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data):
    return json.dumps(data, indent=2, ensure_ascii=False)


def _check_rows(prefix, results):
    return [{**r.as_dict(), "name": f"{prefix}:{r.name}"} for r in results]


def _text_report(report):
    lines = [f"algebra {report.get('algebra')}  order {report.get('order')}"
             + (f"  route {report['route']}" if report.get("route") else "")]
    for c in report["checks"]:
        line = f"{c['status'].upper():5} {c['name']}"
        if "first_nonzero_order" in c:
            line += f"  (first nonzero residual at h^{c['first_nonzero_order']})"
        if "error" in c:
            line += f"  ({c['error']})"
        lines.append(line)
        for t in c.get("residual_terms", [])[:5]:
            lines.append(f"      {t}")
    lines.append(f"overall: {report['status']}")
    if "timings" in report:
        for k, v in report["timings"].items():
            lines.append(f"time {k}: {v:.3f}s")
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------------

def cmd_verify(args):
    from ..rmatrix import CHECKS, RSpec, build_universal_R
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {list(ALL_CHECKS)}")
    alg = get_algebra(args.algebra)
    K = _order(args, args.algebra)
    report = {"schema": REPORT_SCHEMA, "command": "verify",
              "algebra": alg.name, "order": K, "route": None, "checks": []}
    timings = {}
    U = None
    for name in checks:
        start = time.perf_counter()
        try:
            if name == "hopf":
                rows = _check_rows("hopf", verify_hopf(alg, K).axioms)
            else:
                if U is None:
                    spec = RSpec(args.algebra, args.route, K)
                    report["route"] = spec.route
                    U = build_universal_R(spec)
                rows = _check_rows(name, CHECKS[name](U).parts)
        except JordanianError as exc:
            rows = [{"name": name, "status": "error", "error": str(exc)}]
        report["checks"].extend(rows)
        timings[name] = time.perf_counter() - start
    ok = all(c["status"] == "pass" for c in report["checks"])
    report["status"] = "pass" if ok else "fail"
    if args.timings:
        report["timings"] = timings
    _emit(args, _dump(report) if args.format == "json" else _text_report(report))
    return 0 if ok else 1


def cmd_contract(args):
    from ..contraction.api import contract, contract_sl2_to_p2
    if args.poincare:
        K = args.order or 8
        out = contract_sl2_to_p2(K)
    else:
        if not args.mu:
            raise UsageError("contract needs --mu a,b,c or --poincare")
        from ..contraction.engine import MuTriple
        try:
            mu = MuTriple.parse(args.mu)
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        K = args.order or 4
        out = contract(mu, args.mode, K, with_R=args.with_r)
    if args.format == "json":
        text = _dump(out.as_dict())
    elif args.format == "latex":
        if not out.ok:
            text = "% not well defined: " + f"{len(out.offending)} negative eps terms"
        else:
            text = algebra_to_latex(out.algebra, K)
    else:
        if out.ok:
            text = _algebra_text(out.algebra, K)
            if out.R is not None:
                text += f"\nR exponent: {out.R.exponent.format()}"
        else:
            lines = [f"NOT WELL DEFINED: mu={out.mu} mode={out.mode}; "
                     f"{len(out.offending)} terms with negative eps powers"]
            for o in out.offending[:10]:
                lines.append(f"  {o['map']} {o['entry']}: eps^{o['eps_power']} "
                             f"at h^{o['h_order']}: {o['term']}")
            text = "\n".join(lines)
    _emit(args, text)
    return 0 if out.ok else 1


def _algebra_text(alg, K):
    lines = [f"{alg.name}: {alg.description}", f"generators: {' < '.join(alg.generators)}"]
    for a, b in alg.pairs():
        v = alg.commutator(a, b, K)
        if not v.is_zero():
            lines.append(f"[{a},{b}] = {v.format()}")
    for g in alg.generators:
        lines.append(f"Delta({g}) = {alg.coproduct(g, K).format()}")
    for g in alg.generators:
        lines.append(f"S({g}) = {alg.antipode(g, K).format()}")
    return "\n".join(lines)


def cmd_rmatrix(args):
    from ..reps import (REPS, evaluate_R, get_rep, matrix_classical_limit,
                        matrix_qybe, matrix_triangular)
    from ..rmatrix import RSpec, build_universal_R, exponent_form
    name = args.algebra
    if args.rep:
        if args.rep not in REPS:
            raise UsageError(f"unknown rep {args.rep!r}; choose from {sorted(REPS)}")
        rep_alg, _ = REPS[args.rep]
        if rep_alg != name:
            raise UsageError(f"rep {args.rep} belongs to {rep_alg}, not {name}")
    spec = RSpec(name, args.route, _order(args, name))
    U = build_universal_R(spec)
    if args.rep:
        Rm = evaluate_R(U, get_rep(args.rep))
        reports = [matrix_qybe(Rm), matrix_triangular(Rm), matrix_classical_limit(Rm)]
        ok = all(r.passed for r in reports)
        if args.format == "json":
            data = {"schema": "jordanian.matrix/1", "algebra": name,
                    "rep": args.rep, **Rm.to_json(),
                    "checks": [r.as_dict() for r in reports]}
            text = _dump(data)
        elif args.format == "latex":
            text = Rm.to_latex()
        else:
            text = "\n".join([f"R in rep {args.rep}: {Rm.dim}x{Rm.dim}, degree {Rm.degree()} in h"]
                             + [Rm.to_text()]
                             + [f"{'PASS' if r.passed else 'FAIL'} {r.name}" for r in reports])
        _emit(args, text)
        return 0 if ok else 1
    try:
        form = exponent_form(spec).as_dict()
    except NoSuchForm:
        form = None
    if args.format == "json":
        data = {"schema": "jordanian.rmatrix/1", "algebra": name,
                "route": spec.route, "order": spec.order,
                "X": form["X"] if form else None,
                "exponent": series_to_json(U.exponent),
                "R": series_to_json(U.R)}
        text = _dump(data)
    elif args.format == "latex":
        p = r"\hat h" if U.algebra.parameter == "h_hat" else "h"
        text = (f"R = \\exp\\left({format_latex(U.exponent, p)}\\right) "
                f"+ O({p}^{{{spec.order + 1}}})")
    else:
        text = "\n".join([f"algebra {name}  route {spec.route}  order {spec.order}",
                          f"X = {form['X']}" if form else "X = (not recorded)",
                          f"exponent = {U.exponent.format()}",
                          f"R = {U.R.format()}"])
    _emit(args, text)
    return 0


def cmd_eval(args):
    from .parser import evaluate, parse
    alg = get_algebra(args.algebra)
    K = args.order if args.order is not None else 4
    value = evaluate(parse(args.expression, alg), alg, K)
    if args.format == "json":
        text = _dump({"algebra": alg.name, "order": K,
                      "expression": args.expression, "value": series_to_json(value)})
    elif args.format == "latex":
        text = format_latex(value, r"\hat h" if alg.parameter == "h_hat" else "h")
    else:
        text = value.format()
    _emit(args, text)
    return 0


def cmd_list(args):
    rows = []
    for name in algebra_names(include_auxiliary=True):
        alg = get_algebra(name)
        rows.append({"name": name, "generators": list(alg.generators),
                     "parameter": alg.parameter, "description": alg.description})
    if args.format == "json":
        text = _dump(rows)
    elif args.format == "latex":
        text = "\n".join(algebra_to_latex(get_algebra(r["name"]), args.order or 1)
                         for r in rows)
    else:
        text = "\n".join(f"{r['name']:12} {' '.join(r['generators'])}  {r['description']}"
                         for r in rows)
    _emit(args, text)
    return 0


def cmd_export(args):
    alg = get_algebra(args.algebra)
    K = args.order if args.order is not None else 2
    _emit(args, _dump(algebra_to_json(alg, K)) if args.format == "json"
          else algebra_to_latex(alg, K))
    return 0


# -- argument parsing ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="jordanian",
        description="Exact verification of Jordanian quantum algebras and their R matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "text", "latex"), default="text"):
        sp.add_argument("--order", type=int, help="truncation order K")
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", help="write output to this path")

    v = sub.add_parser("verify", help="run Hopf and R-matrix checks")
    v.add_argument("--algebra", required=True)
    v.add_argument("--checks", default=",".join(ALL_CHECKS))
    v.add_argument("--route", help="R construction route")
    v.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in the report")
    common(v, ("json", "text"))
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("contract", help="graded contraction of so4h (or sl2h -> p2m)")
    c.add_argument("--mu", help="three values in {0,1}, e.g. 1,1,0")
    c.add_argument("--mode", choices=("eq22", "eq23"), default="eq23")
    c.add_argument("--with-r", action="store_true", help="also contract the R matrix")
    c.add_argument("--poincare", action="store_true",
                   help="contract sl2h to the Poincare algebra p2m instead")
    common(c)
    c.set_defaults(func=cmd_contract)

    r = sub.add_parser("rmatrix", help="universal R or its image in a representation")
    r.add_argument("--algebra", required=True)
    r.add_argument("--route")
    r.add_argument("--rep", help="fund (sl2h) or so4pair (so4h)")
    common(r)
    r.set_defaults(func=cmd_rmatrix)

    e = sub.add_parser("eval", help="evaluate an expression in an algebra")
    e.add_argument("expression")
    e.add_argument("--algebra", required=True)
    common(e)
    e.set_defaults(func=cmd_eval)

    ls = sub.add_parser("list-algebras", help="list registered and auxiliary algebras")
    common(ls)
    ls.set_defaults(func=cmd_list)

    x = sub.add_parser("export", help="export an algebra's tables")
    x.add_argument("--algebra", required=True)
    common(x, ("json", "latex"), "json")
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnknownAlgebra, UnknownGenerator, ExprSyntaxError,
            ValueError) as exc:
        print(f"jordanian {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except NoSuchForm as exc:
        print(f"jordanian {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except JordanianError as exc:
        print(f"jordanian {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
