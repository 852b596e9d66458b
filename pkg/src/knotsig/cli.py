"""Command-line interface.

Exit codes: 0 for any successfully computed answer (including negative
verdicts), 2 for parse or input-validation errors, 3 when an internal
iteration budget was exhausted before the answer was certain.
"""

from __future__ import annotations

import argparse
import sys

from .errors import BudgetExceededError, CertificationError, PolyParseError
from .milnor import mil_enum
from .obstruction import obstruction_group
from .pipeline import AnalysisRequest, analyze, analyze_tau, report_render
from .polys import alexander_check, delta_to_p, p_to_delta, parse_poly, poly_text
from .realroots import rho_delta, rho_p
from .seifert import (
    alexander_of_form,
    form_to_pair,
    mat_add,
    milnor_signatures,
    parse_matrix,
    signature_exact,
    transpose,
    unimodular_t,
    validate_form,
)
from .version import TOOL_VERSION
from .zfactor import factor_z, standing_assumptions

MILNOR_RHO_CAP = 64


def _parse_tau(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.replace(" ", ",").split(",") if v)
    except ValueError as exc:
        raise PolyParseError(f"bad tau list: {text!r}") from exc
    if any(v not in (-2, 2) for v in values):
        raise PolyParseError(f"tau values must be -2 or 2: {text!r}")
    return values


def _cmd_analyze(args: argparse.Namespace) -> int:
    delta = parse_poly(args.delta)
    if args.tau is not None:
        req = AnalysisRequest(delta=delta, m=args.m, tau=_parse_tau(args.tau), seed=args.seed)
        report = analyze_tau(req)
    elif args.signature is not None:
        req = AnalysisRequest(delta=delta, m=args.m, signature=args.signature, seed=args.seed)
        report = analyze(req)
    else:
        raise PolyParseError("analyze needs --signature or --tau")
    print(report_render(report, args.format))
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    if (args.delta is None) == (args.p is None):
        raise PolyParseError("transform needs exactly one of --delta or --p")
    if args.delta is not None:
        print(poly_text(delta_to_p(parse_poly(args.delta))))
    else:
        print(poly_text(p_to_delta(parse_poly(args.p))))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    delta = parse_poly(args.delta)
    rep = alexander_check(delta)
    print(f"degree even:        {rep.degree_even} (n = {rep.n})")
    print(f"(1) reciprocal:     {rep.cond_reciprocal}")
    print(f"(2) Delta(1)=(-1)^n: {rep.cond_at_one}")
    wit = f" ({rep.delta_minus_one} = {rep.square_root_witness}^2)" if rep.cond_at_minus_one else f" ({rep.delta_minus_one})"
    print(f"(3) Delta(-1) square: {rep.cond_at_minus_one}{wit}")
    print(f"all conditions:     {rep.all_pass}")
    return 0


def _cmd_rho(args: argparse.Namespace) -> int:
    if (args.delta is None) == (args.p is None):
        raise PolyParseError("rho needs exactly one of --delta or --p")
    if args.delta is not None:
        print(rho_delta(parse_poly(args.delta)))
    else:
        print(rho_p(parse_poly(args.p)))
    return 0


def _cmd_factor(args: argparse.Namespace) -> int:
    fz = factor_z(parse_poly(args.poly))
    if fz.content != 1 or not fz.factors:
        print(f"content: {fz.content}")
    for q, e in fz.factors:
        mult = f" ^{e}" if e > 1 else ""
        print(f"{poly_text(q)}{mult}")
    return 0


def _cmd_group(args: argparse.Namespace) -> int:
    delta = parse_poly(args.delta)
    rep = alexander_check(delta)
    if not rep.all_pass:
        print("conditions on Delta fail; the obstruction group is not defined")
        return 0
    p_poly = delta_to_p(delta)
    sfs = standing_assumptions(p_poly)
    if not (sfs.squarefree and sfs.all_symmetric):
        print("standing assumptions fail (P must be a squarefree product of symmetric factors)")
        return 0
    group, table = obstruction_group(sfs)
    for i, f in enumerate(sfs.factors):
        print(f"factor {i}: {poly_text(f)}")
    for entry in table:
        i, j = entry.pair
        primes = "{" + ", ".join(map(str, entry.primes)) + "}"
        print(f"primes({i},{j}) = {primes}")
        for p, w in entry.witnesses:
            print(f"  witness mod {p}: coeffs {list(w.coeffs)}")
    comps = " | ".join("{" + ", ".join(map(str, c)) + "}" for c in group.components)
    print(f"components: {comps}")
    print(f"group rank: {group.rank} (order 2^{group.rank})")
    return 0


def _cmd_milnor(args: argparse.Namespace) -> int:
    delta = parse_poly(args.delta)
    p_poly = delta_to_p(delta)
    rho = rho_p(p_poly)
    if rho > MILNOR_RHO_CAP:
        raise BudgetExceededError(
            f"rho = {rho} exceeds the enumeration cap of {MILNOR_RHO_CAP}"
        )
    family = mil_enum(p_poly, args.signature)
    print(f"rho = {family.rho}, target s = {family.s}: {len(family)} assignment(s)")
    for a in family.assignments:
        print(" ".join(f"{v:+d}" for v in a.values))
    return 0


def _cmd_seifert(args: argparse.Namespace) -> int:
    mat = parse_matrix(args.matrix)
    op = args.op
    if op == "validate":
        val = validate_form(mat)
        print("valid Seifert form" if val.ok else "invalid: " + "; ".join(val.problems))
        return 0
    if op == "alexander":
        print(poly_text(alexander_of_form(mat)))
        return 0
    if op == "signature":
        print(signature_exact(mat_add(mat, transpose(mat))))
        return 0
    if op == "to-pair":
        pair = form_to_pair(mat)
        print(f"S = {[list(r) for r in pair.s]}")
        print(f"a = {[list(r) for r in pair.a]}")
        return 0
    if op == "milnor":
        pair = form_to_pair(mat)
        ms = milnor_signatures(pair.s, pair.a)
        for factor, value in zip(ms.factors, ms.values):
            iv = factor.v_root_interval
            print(f"v-root in ({iv.lo}, {iv.hi}): {value:+d}")
        print(f"total: {ms.total}")
        if ms.has_zero_value:
            print("warning: an indefinite (zero) restriction occurred")
        return 0
    if op == "isometry":
        t = unimodular_t(mat)
        print(f"t = {[list(r) for r in t]}")
        return 0
    raise PolyParseError(f"unknown seifert op {op!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotsig",
        description="Exact calculator for realizable knot signatures with a given Alexander polynomial",
    )
    parser.add_argument("--version", action="version", version=f"knotsig {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full realizability analysis of (Delta, m, s) or (Delta, m, tau)")
    p_an.add_argument("--delta", required=True, help="Alexander polynomial")
    p_an.add_argument("--m", type=int, required=True, help="knot dimension, 3 mod 4")
    p_an.add_argument("--signature", type=int, help="target signature s")
    p_an.add_argument("--tau", help="explicit assignment, e.g. '2,-2,2,2'")
    p_an.add_argument("--seed", type=int, default=0, help="seed for randomized subroutines")
    p_an.add_argument("--format", choices=("json", "text"), default="text")
    p_an.set_defaults(func=_cmd_analyze)

    p_tr = sub.add_parser("transform", help="Delta -> P or P -> Delta")
    p_tr.add_argument("--delta")
    p_tr.add_argument("--p")
    p_tr.set_defaults(func=_cmd_transform)

    p_ch = sub.add_parser("check", help="the three conditions on Delta")
    p_ch.add_argument("--delta", required=True)
    p_ch.set_defaults(func=_cmd_check)

    p_rho = sub.add_parser("rho", help="unit-circle root count")
    p_rho.add_argument("--delta")
    p_rho.add_argument("--p")
    p_rho.set_defaults(func=_cmd_rho)

    p_fa = sub.add_parser("factor", help="factor an integer polynomial into irreducibles")
    p_fa.add_argument("--poly", required=True)
    p_fa.set_defaults(func=_cmd_factor)

    p_gr = sub.add_parser("group", help="prime table and obstruction group of Delta")
    p_gr.add_argument("--delta", required=True)
    p_gr.set_defaults(func=_cmd_group)

    p_mi = sub.add_parser("milnor", help="enumerate Milnor assignments summing to s")
    p_mi.add_argument("--delta", required=True)
    p_mi.add_argument("--signature", type=int, required=True)
    p_mi.set_defaults(func=_cmd_milnor)

    p_se = sub.add_parser("seifert", help="Seifert form toolkit")
    p_se.add_argument("--matrix", required=True, help="row-major integers, e.g. [[0,2],[-1,0]]")
    p_se.add_argument(
        "--op",
        required=True,
        choices=("validate", "alexander", "signature", "to-pair", "milnor", "isometry"),
    )
    p_se.set_defaults(func=_cmd_seifert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, CertificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
