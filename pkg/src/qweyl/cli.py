"""Command-line interface.

Subcommands: normalize, verify, suite, rep-check, expand.  Exit codes:
0 all expected-pass checks passed, 1 at least one verification failed,
2 usage or parse error.  Machine formats (json, tsv) are byte-stable for
identical invocations: timings are reported as 0 there (the text format
shows real times).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import identities as ident
from . import parser as par
from . import reps as rp
from .identities import CaseResult, Report, SuiteConfig
from .scalar import ScalarError
from .weyl import Relation, WordError, extended, hq


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--relation", choices=("hq", "extended"), default="hq")
    p.add_argument("--F", default=None, help="remainder polynomial in N for the extended relation")
    p.add_argument("--sigma", default=None, help="coefficient on b*a (scalar expression)")
    p.add_argument("--params", default=None, help="comma-separated bindings, e.g. p=1,q=2/3")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)


def build_arg_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="qweyl", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="print the canonical normal form of an expression")
    p.add_argument("expr", nargs="+")
    _common_flags(p)

    p = sub.add_parser("verify", help="check LHS == RHS exactly")
    p.add_argument("expr", nargs="+")
    _common_flags(p)

    p = sub.add_parser("suite", help="run an identity catalog")
    p.add_argument("--catalog", default="all", choices=("all", "core", "errata", "extended", "none"))
    p.add_argument("--ids", default=None, help="comma-separated catalog tags to keep, e.g. THM5,LEM3")
    p.add_argument("--variants", default=None, help="comma-separated variant filter, e.g. as_stated")
    _common_flags(p)

    p = sub.add_parser("rep-check", help="verify identities inside concrete representations")
    p.add_argument("--rep", choices=("diff", "diff_ab", "diff_ba", "jackson", "delta", "fock"), default=None)
    p.add_argument("--eq", choices=("1a", "1b", "2a", "2b", "3", "4", "20", "22"), default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--degree", type=int, default=None)
    _common_flags(p)

    p = sub.add_parser("expand", help="expand a grade-0 expression in powers of (a*b)")
    p.add_argument("expr", nargs="+")
    _common_flags(p)

    return top


def _parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, sep, value = piece.partition("=")
        if not sep:
            raise par.ParseError("--params entries look like p=1", 1, 1, {"="})
        negative = value.strip().startswith("-")
        raw = value.strip().lstrip("-")
        out[name.strip()] = -Fraction(raw) if negative else Fraction(raw)
    return out


def _relation_from(args) -> Relation:
    if args.relation == "extended":
        F = par.eval_npoly(par.parse(args.F)) if args.F else None
        sigma = par.eval_scalar(par.parse(args.sigma)) if args.sigma else None
        rel = extended(sigma=sigma, F=F)
    else:
        if args.F:
            raise par.EvalError("--F applies to the extended relation")
        rel = hq()
        if args.sigma:
            rel = Relation(par.eval_scalar(par.parse(args.sigma)), rel.rho)
    params = _parse_params(args.params)
    if params:
        rel = rel.bind(params)
    return rel


def _emit_result(args, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(dict(payload, version=1), separators=(", ", ": ")))
    elif args.format == "tsv":
        print("\t".join(str(v) for v in payload.values()))
    else:
        for k, v in payload.items():
            print("%s: %s" % (k, v))


def _eval_bound(ast, rel, args):
    """Evaluate and then specialize any bound parameters in the coefficients."""
    nf = par.evaluate(ast, rel)
    params = _parse_params(args.params)
    return nf.substitute(params) if params else nf


def _cmd_normalize(args) -> int:
    rel = _relation_from(args)
    nf = _eval_bound(par.parse(" ".join(args.expr)), rel, args)
    if args.format == "text":
        print(nf.render())
    else:
        _emit_result(args, {"result": nf.render()})
    return 0


def _cmd_verify(args) -> int:
    rel = _relation_from(args)
    stmt = par.parse_statement("verify " + " ".join(args.expr))
    if stmt.kind != "verify":
        raise par.ParseError("verify needs LHS == RHS", 1, 1, {"=="})
    lhs = _eval_bound(stmt.exprs[0], rel, args)
    rhs = _eval_bound(stmt.exprs[1], rel, args)
    residual = lhs - rhs
    status = "pass" if residual.is_zero() else "fail"
    _emit_result(args, {"status": status, "residual": residual.render() if residual else ""})
    return 0 if status == "pass" else 1


def _cmd_expand(args) -> int:
    rel = _relation_from(args)
    nf = _eval_bound(par.parse(" ".join(args.expr)), rel, args)
    try:
        expansion = ident.expand_in_ab_powers(nf)
    except ident.NotExpressibleError as exc:
        _emit_result(args, {"status": "fail", "error": str(exc)})
        return 1
    coeffs = [c.text() if hasattr(c, "text") else c.compact() for c in expansion.coeffs]
    _emit_result(args, {"status": "pass", "coefficients": json.dumps(coeffs)})
    return 0


def _cmd_suite(args) -> int:
    config = SuiteConfig(
        catalog=args.catalog,
        max_n=args.max_n,
        ids=tuple(s for s in (args.ids or "").split(",") if s),
        variants=tuple(s for s in (args.variants or "").split(",") if s),
        params=_parse_params(args.params),
        seed=args.seed,
        jobs=args.jobs,
    )
    report = ident.suite(config)
    _print_report(args, report)
    return 0 if report.ok() else 1


def _cmd_rep_check(args) -> int:
    max_n = args.n if args.n is not None else min(args.max_n, 3)
    cases = rp.standard_rep_cases(
        rep_filter=args.rep,
        eq_filter=args.eq,
        max_n=max_n,
        degree=args.degree,
        seed=args.seed,
    )
    results = []
    for cid, rep_name, case_args, variant, expected, runner in cases:
        verdict = runner()
        results.append(
            CaseResult(
                id=cid,
                args=dict(case_args, rep=rep_name),
                variant=variant,
                params={},
                status=verdict.status,
                expected=expected,
                residual=verdict.residual_text() if verdict.status == "fail" else "",
                millis=int(verdict.elapsed * 1000),
                detail=verdict.detail,
            )
        )
    report = Report(cases=results, notes=[rp.JACKSON_NOTE])
    _print_report(args, report)
    return 0 if report.ok() else 1


def _print_report(args, report: Report) -> None:
    if args.format == "json":
        print(report.to_json())
    elif args.format == "tsv":
        print(report.to_tsv(), end="")
    else:
        print(report.to_text(), end="")


def main(argv=None) -> int:
    top = build_arg_parser()
    try:
        args = top.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "normalize":
            return _cmd_normalize(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "suite":
            return _cmd_suite(args)
        if args.command == "rep-check":
            return _cmd_rep_check(args)
        if args.command == "expand":
            return _cmd_expand(args)
        return 2
    except (par.ParseError, par.EvalError, WordError, ScalarError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
