"""Command-line front end.

Thin adapters only: each subcommand parses its inputs, calls one core
operation and renders the result through the shared format routines.
Exit status is 0 for a passing run, 1 when a verification or feasibility
check fails, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraParams, Case, bracket, classify_case, verify_algebra
from .classify import CandidateFamily, CanonicalParams, solve_candidate, isom_decide
from .grammar import (
    format_bipoly,
    format_element,
    format_unipoly,
    parse_bipoly,
    parse_scalar,
    parse_symbol,
    parse_unipoly,
)
from .orbit import check_invariant_subspace, orbit_closure
from .report import Report
from .repmod import ModuleSpec, act_sym, q_poly, verify_module
from .scalars import format_scalar

_FIXED_CASES = {
    Case.VIR_00: ("0", "0"),
    Case.VIR_0_MINUS_1: ("0", "-1"),
    Case.VIR_HALF_0: ("1/2", "0"),
    Case.VIR_01: ("0", "1"),
}


def _load_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return doc


def _algebra_params(args) -> AlgebraParams:
    case = Case(args.case)
    if case in _FIXED_CASES:
        if args.a is not None or args.b is not None:
            raise ValueError(f"--a/--b are implied by case {case.value}")
        a, b = (parse_scalar(x) for x in _FIXED_CASES[case])
    else:
        if args.a is None or args.b is None:
            raise ValueError(f"case {case.value} needs explicit --a and --b")
        a, b = parse_scalar(args.a), parse_scalar(args.b)
    params = classify_case(a, b, want_extension=case != Case.W_ONLY)
    if params.case != case:
        raise ValueError(
            f"(a, b) = ({format_scalar(a)}, {format_scalar(b)}) "
            f"belongs to case {params.case.value}"
        )
    return params


def _candidate_from_doc(doc: dict) -> CandidateFamily:
    required = {"a", "b", "N", "a_m", "g_m"}
    missing = required - doc.keys()
    if missing:
        raise ValueError(f"candidate document missing fields: {sorted(missing)}")
    unknown = doc.keys() - required
    if unknown:
        raise ValueError(f"candidate document has unknown fields: {sorted(unknown)}")
    window = int(doc["N"])
    a_m = {int(m): parse_unipoly(p).embed() for m, p in doc["a_m"].items()}
    g_m = {int(m): parse_bipoly(p) for m, p in doc["g_m"].items()}
    return CandidateFamily(
        a=parse_scalar(str(doc["a"])),
        b=parse_scalar(str(doc["b"])),
        window=window,
        a_m=a_m,
        g_m=g_m,
    )


def _parse_bounds(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("--bounds expects two comma-separated integers, e.g. 8,8")
    return int(parts[0]), int(parts[1])


def _parse_predicate(text: str):
    body = text.replace(" ", "")
    for var in ("s", "t"):
        prefix = var + ">="
        if body.startswith(prefix) and body[len(prefix):].lstrip("-").isdigit():
            k = int(body[len(prefix):])
            if var == "s":
                return lambda i, j: i >= k
            return lambda i, j: j >= k
    raise ValueError("--invariant expects 's>=K' or 't>=K'")


def _render_report(report: Report, fmt: str) -> str:
    return report.to_json() if fmt == "json" else report.to_text()


def _render_value(suite: str, params: dict, result: str, fmt: str) -> str:
    if fmt == "text":
        return result
    report = Report(suite=suite, params=params, checks=1)
    report.data["result"] = result
    return report.to_json()


def _cmd_bracket(args) -> tuple[int, str]:
    params = _algebra_params(args)
    out = bracket(parse_symbol(args.x), parse_symbol(args.y), params)
    echo = {"case": params.case.value, "x": args.x, "y": args.y}
    return 0, _render_value("bracket", echo, format_element(out), args.format)


def _cmd_verify_algebra(args) -> tuple[int, str]:
    report = verify_algebra(_algebra_params(args), window=args.window)
    return (0 if report.passed else 1), _render_report(report, args.format)


def _cmd_act(args) -> tuple[int, str]:
    spec = ModuleSpec.from_dict(_load_json(args.spec))
    sym = parse_symbol(args.op)
    image = act_sym(spec, sym, parse_bipoly(args.poly))
    echo = {"op": args.op, "poly": args.poly}
    return 0, _render_value("act", echo, format_bipoly(image), args.format)


def _cmd_verify_module(args) -> tuple[int, str]:
    spec = ModuleSpec.from_dict(_load_json(args.spec))
    report = verify_module(spec, window=args.window, degree=args.deg)
    return (0 if report.passed else 1), _render_report(report, args.format)


def _cmd_qpoly(args) -> tuple[int, str]:
    alpha = parse_scalar(args.alpha)
    b = parse_scalar(args.b)
    poly = q_poly(args.n, args.k, alpha, b)
    echo = {"n": str(args.n), "k": str(args.k), "alpha": args.alpha, "b": args.b}
    return 0, _render_value("qpoly", echo, format_unipoly(poly), args.format)


def _cmd_classify(args) -> tuple[int, str]:
    fam = _candidate_from_doc(_load_json(args.candidate))
    out = solve_candidate(fam)
    if isinstance(out, CanonicalParams):
        if args.format == "json":
            return 0, json.dumps(out.to_dict(), indent=2)
        doc = out.to_dict()
        coeffs = ", ".join(doc["coeffs"]) or "(empty)"
        return 0, (
            f"family = {doc['family']}\nlambda = {doc['lambda']}\n"
            f"alpha = {doc['alpha']}\ncoeffs = {coeffs}"
        )
    if args.format == "json":
        return 1, json.dumps(out.to_dict(), indent=2)
    m, n = out.indices
    return 1, (
        f"infeasible: {out.constraint} at ({m}, {n}), residue {out.residue_text}"
    )


def _cmd_isom(args) -> tuple[int, str]:
    p = CanonicalParams.from_dict(_load_json(args.p))
    q = CanonicalParams.from_dict(_load_json(args.q))
    verdict = isom_decide(p, q, parse_scalar(args.b))
    if args.format == "json":
        return 0, json.dumps({"isomorphic": verdict}, indent=2)
    return 0, "true" if verdict else "false"


def _cmd_orbit(args) -> tuple[int, str]:
    spec = ModuleSpec.from_dict(_load_json(args.spec))
    bounds = _parse_bounds(args.bounds)
    if args.invariant is not None:
        ok = check_invariant_subspace(
            spec, _parse_predicate(args.invariant), window=args.window, bounds=bounds
        )
        if args.format == "json":
            return 0, json.dumps({"invariant": ok}, indent=2)
        return 0, "true" if ok else "false"
    if not args.seed:
        raise ValueError("orbit needs at least one --seed (or --invariant)")
    seeds = [parse_bipoly(s) for s in args.seed]
    report = orbit_closure(
        spec, seeds, window=args.window, bounds=bounds, max_rounds=args.max_rounds
    )
    return 0, _render_report(report, args.format)


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="virab",
        description="Exact computations with W(a,b) and Vir(a,b) modules",
    )
    sub = top.add_subparsers(dest="command", required=True)
    cases = [c.value for c in Case]

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the output to this path instead of stdout")

    def algebra_flags(p):
        p.add_argument("--case", choices=cases, required=True)
        p.add_argument("--a", help="scalar a (cases w and vir-gen)")
        p.add_argument("--b", help="scalar b (cases w and vir-gen)")

    p = sub.add_parser("bracket", help="bracket of two basis symbols")
    algebra_flags(p)
    p.add_argument("--x", required=True, help="basis symbol, e.g. L:2")
    p.add_argument("--y", required=True, help="basis symbol, e.g. L:-2")
    common(p)
    p.set_defaults(run=_cmd_bracket)

    p = sub.add_parser("verify-algebra", help="antisymmetry and Jacobi sweep")
    algebra_flags(p)
    p.add_argument("--window", type=int, default=5)
    common(p)
    p.set_defaults(run=_cmd_verify_algebra)

    p = sub.add_parser("act", help="apply one generator to a polynomial")
    p.add_argument("--spec", required=True, help="module spec JSON path")
    p.add_argument("--op", required=True, help="generator, e.g. L:1 or W:-2")
    p.add_argument("--poly", required=True, help="polynomial in s, t")
    common(p)
    p.set_defaults(run=_cmd_act)

    p = sub.add_parser("verify-module", help="bracket-compatibility sweep")
    p.add_argument("--spec", required=True, help="module spec JSON path")
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--deg", type=int, default=4)
    common(p)
    p.set_defaults(run=_cmd_verify_module)

    p = sub.add_parser("qpoly", help="generating polynomial of the h-sequence space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--b", required=True)
    common(p)
    p.set_defaults(run=_cmd_qpoly)

    p = sub.add_parser("classify", help="solve a candidate family to canonical form")
    p.add_argument("--candidate", required=True, help="candidate document JSON path")
    common(p)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("isom", help="decide isomorphism of two canonical tuples")
    p.add_argument("--p", required=True, help="canonical params JSON path")
    p.add_argument("--q", required=True, help="canonical params JSON path")
    p.add_argument("--b", required=True, help="scalar b both modules live over")
    common(p)
    p.set_defaults(run=_cmd_isom)

    p = sub.add_parser("orbit", help="grow a submodule inside a monomial box")
    p.add_argument("--spec", required=True, help="module spec JSON path")
    p.add_argument("--seed", action="append", default=[], help="seed polynomial")
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--bounds", default="8,8", help="monomial box, e.g. 8,8")
    p.add_argument("--max-rounds", type=int, default=6)
    p.add_argument(
        "--invariant",
        help="check invariance of a monomial span instead, e.g. 't>=1'",
    )
    common(p)
    p.set_defaults(run=_cmd_orbit)

    return top


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        status, rendered = args.run(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered + "\n")
    else:
        print(rendered)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
