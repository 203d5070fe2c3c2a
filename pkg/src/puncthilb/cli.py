"""Command-line front end: ``puncthilb {cells,table,ps,counterexample,stdbasis,verify}``.

Exit codes: 0 ok, 1 check failed, 2 usage or parse error, 3 oracle bound
exceeded, 4 truncation too short.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .acceptance import CRITERIA, run_all
from .cells import topology_report
from .ps_compare import classify_monomial, counterexample_report, ps_dimension
from .report import FORMATS, render_cells, render_table
from .semigroup import SemigroupError, plane_branch
from .semimodule import (
    InvalidBasisError,
    OracleBoundError,
    as_element_set,
    enumerate_mod_r,
    generated,
    oracle_bound,
    oracle_enumerate_mod_r,
)
from .series import HorizonError, SeriesParseError, format_series, parse_series, parse_series_list
from .stdbasis import (
    MalformedGeneratorError,
    PrecisionError,
    StdBasisProblem,
    reduce,
    solve_dependent_coefficients,
    standard_basis_verdict,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ORACLE, EXIT_PRECISION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _oracle_verdict(gamma, r: int) -> str:
    bound = oracle_bound(gamma, r)
    ours = sorted((as_element_set(m, bound) for m in enumerate_mod_r(gamma, r)), key=sorted)
    brute = oracle_enumerate_mod_r(gamma, r)
    return "MATCH" if ours == brute else "MISMATCH"


def cmd_cells(args) -> int:
    gamma = plane_branch(args.p, args.q)
    rep = topology_report(gamma, args.r, lower_index=args.lower_index)
    oracle = _oracle_verdict(gamma, args.r) if args.oracle else None
    _emit(render_cells(rep, args.format, oracle), args.output)
    return EXIT_FAIL if oracle == "MISMATCH" else EXIT_OK


def cmd_table(args) -> int:
    gamma = plane_branch(args.p, args.q)
    reports = [topology_report(gamma, r, lower_index=args.lower_index) for r in range(args.r_max + 1)]
    _emit(render_table(reports, args.format), args.output)
    return EXIT_OK


def cmd_ps(args) -> int:
    gamma = plane_branch(args.p, args.q)
    gens = [int(x) for x in args.gens.split(",") if x.strip()]
    delta_mod = generated(gamma, gens)
    if not delta_mod.is_inside(gamma):
        raise UsageError(f"<{args.gens}> is not contained in the semigroup")
    r = delta_mod.codim(gamma)
    rep = ps_dimension(gamma, delta_mod, r)
    payload = rep.as_dict()
    payload["semigroup"] = list(gamma.generators)
    payload["monomial_class"] = str(classify_monomial(gamma))
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["| field | value |", "|---|---|"]
        lines += [f"| {k} | {payload[k]} |" for k in sorted(payload)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_counterexample(args) -> int:
    rep = counterexample_report()
    text = rep.to_json() + "\n" if args.format == "json" else rep.to_markdown()
    _emit(text, args.output)
    return EXIT_OK if rep.status == "PASS" else EXIT_FAIL


def _stdbasis_payload(args) -> tuple[dict, int]:
    ring = parse_series_list(args.ring, args.trunc)
    gens = parse_series_list(args.gens, args.trunc)
    if not ring or not gens:
        raise UsageError("--ring and --gens need at least one series each")
    head = ring[0]
    if len(head.coeffs) != 1 or head.leading_term()[1] != 1:
        raise UsageError(f"first ring generator must be a pure power of t, got {format_series(head)}")
    payload: dict = {
        "ring": [format_series(g) for g in ring],
        "gens": [format_series(h) for h in gens],
        "trunc": args.trunc,
        "action": args.action,
    }
    if args.action == "solve":
        sol = solve_dependent_coefficients(gens, ring)
        payload.update({
            "status": "RESOLVED" if sol.resolved else ("INCONSISTENT" if not sol.consistent else "OPEN"),
            "values": {k: str(v) for k, v in sorted(sol.values.items())},
            "generators": [format_series(h) for h in sol.generators],
            "unresolved": sorted(sol.unresolved),
            "standard": sol.standard,
        })
        if sol.conflict is not None:
            idx, e, coef = sol.conflict
            payload["conflict"] = {"generator": idx, "exponent": e, "coefficient": str(coef)}
        return payload, EXIT_OK if sol.consistent else EXIT_FAIL
    problem = StdBasisProblem(ring, gens, args.trunc)
    if args.action == "check":
        verdict = standard_basis_verdict(problem)
        payload["status"] = "PASS" if verdict.standard else "FAIL"
        payload["residues"] = [
            {"pair": [i, j], "s_process": format_series(s), "remainder": format_series(rem)}
            for i, j, s, rem in verdict.residues
        ]
        return payload, EXIT_OK if verdict.standard else EXIT_FAIL
    f = parse_series(args.f, args.trunc)
    red = reduce(f, problem)
    payload["f"] = format_series(f)
    payload["quotients"] = [format_series(red.quotient_series(problem, l)) for l in range(len(gens))]
    payload["remainder"] = format_series(red.remainder)
    payload["steps"] = red.steps
    return payload, EXIT_OK


def cmd_stdbasis(args) -> int:
    if args.action == "reduce" and args.f is None:
        raise UsageError("reduce needs --f EXPR")
    payload, code = _stdbasis_payload(args)
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"ring: {', '.join(payload['ring'])}", f"gens: {', '.join(payload['gens'])}"]
        if "status" in payload:
            lines.append(f"status: {payload['status']}")
        for res in payload.get("residues", []):
            i, j = res["pair"]
            lines.append(f"  S({i},{j}) = {res['s_process']}  ->  remainder {res['remainder']}")
        for l, qt in enumerate(payload.get("quotients", [])):
            lines.append(f"quotient {l}: {qt}")
        if "remainder" in payload:
            lines.append(f"remainder: {payload['remainder']}")
        for k, v in payload.get("values", {}).items():
            lines.append(f"{k} = {v}")
        for l, h in enumerate(payload.get("generators", [])):
            lines.append(f"h{l} = {h}")
        if payload.get("unresolved"):
            lines.append(f"unresolved: {', '.join(payload['unresolved'])}")
        if "conflict" in payload:
            c = payload["conflict"]
            lines.append(f"conflict: generator {c['generator']} keeps {c['coefficient']}*t^{c['exponent']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return code


def cmd_verify(args) -> int:
    outcomes = run_all(lower_index=args.lower_index, only=args.only)
    for out in outcomes:
        print(out.line())
    failed = [o.number for o in outcomes if not o.passed]
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} PASS" + (f"; failed: {failed}" if failed else ""))
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="puncthilb",
                                     description="Cells of punctual Hilbert schemes of plane branches.")
    sub = parser.add_subparsers(dest="command", required=True)

    def branch_args(p, formats=FORMATS):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--output", help="write to FILE instead of stdout")

    p = sub.add_parser("cells", help="cell inventory of Hilb^r")
    branch_args(p)
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--lower-index", type=int, choices=(0, 1), default=0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("table", help="Euler and Betti rows for r = 0..r-max")
    branch_args(p)
    p.add_argument("--r-max", type=_nonneg, required=True)
    p.add_argument("--lower-index", type=int, choices=(0, 1), default=0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("ps", help="compare the PS dimension with the window count")
    branch_args(p, ("json", "md"))
    p.add_argument("--gens", required=True, help="comma-separated generators of Delta, e.g. 4,6,7")
    p.set_defaults(func=cmd_ps)

    p = sub.add_parser("counterexample", help="checked chain for Delta = <4,6,7> over <3,4>")
    p.add_argument("--format", choices=("json", "md"), default="md")
    p.add_argument("--output")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("stdbasis", help="standard bases over C[[G]]")
    p.add_argument("--ring", required=True, help='ring generators, e.g. "t^3, t^4+t^5"')
    p.add_argument("--gens", required=True, help='module generators, e.g. "t^4,t^6,t^7"')
    p.add_argument("--trunc", type=int, default=40)
    p.add_argument("--format", choices=("json", "md"), default="md")
    p.add_argument("--output")
    p.add_argument("action", choices=("check", "reduce", "solve"))
    p.add_argument("--f", help="series to divide (reduce only)")
    p.set_defaults(func=cmd_stdbasis)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--lower-index", type=int, choices=(0, 1), default=0,
                   help="1 starts the window sum at i=1 (debug variant)")
    p.add_argument("--only", type=int, nargs="+", choices=[c[0] for c in CRITERIA])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SemigroupError, SeriesParseError, MalformedGeneratorError,
            InvalidBasisError) as exc:
        print(f"puncthilb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleBoundError as exc:
        print(f"puncthilb: oracle bound exceeded: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (PrecisionError, HorizonError) as exc:
        print(f"puncthilb: precision: {exc}; rerun with a larger --trunc", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
