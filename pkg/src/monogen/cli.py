"""Command line surface: analyze, dedekind, polygon, quartic, corpus.

Exit codes: 0 for a definite result, 1 for an inconclusive verdict or a
corpus mismatch, 2 for usage or input errors.  With --json the report is
a single JSON document on stdout, deterministic byte for byte for a given
input; every big integer is serialized as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .arith import EffortConfig, Factorization, is_prime, squarefree_status, SQUAREFREE
from .dedekind import SplittingType, dedekind_test
from .monogenity import (
    FAMILY_BINOMIAL_12,
    FAMILY_XN_X_1,
    INCONCLUSIVE,
    MONOGENIC,
    NOT_MONOGENIC,
    ORACLE_NOT_APPLICABLE,
    MonogenityReport,
    ReduciblePolynomialError,
    analyze,
    family_oracle,
)
from .newton import OreResult, ore_analysis, polygon_sketch
from .poly import IntPoly, ModPoly, ParseError, format_fq_poly, parse_poly
from .quartic import QuarticSetup, SearchBounds, index_of_element, search_generators

SCHEMA_PREFIX = "monogen"
SCHEMA_VERSION = 1


class InputError(Exception):
    """User input problem; maps to exit code 2."""


def _schema(command: str) -> str:
    return f"{SCHEMA_PREFIX}.{command}/{SCHEMA_VERSION}"


# ---------------------------------------------------------------------------
# Serialization helpers (big integers as decimal strings, stable key order)


def _poly_payload(f: IntPoly) -> dict:
    return {"text": str(f), "coefficients": [str(c) for c in f.coeffs]}


def _factorization_payload(fact: Factorization) -> dict:
    return {
        "value": str(fact.value),
        "factors": [[str(p), e] for p, e in fact.factors],
        "cofactor": str(fact.cofactor),
    }


def _splitting_payload(s: SplittingType | None):
    if s is None:
        return None
    return [[e, f] for e, f in s.pairs]


def _bound_payload(bound) -> dict:
    return {"value": bound.value, "exact": bound.exact}


def _ore_payload(result: OreResult) -> list[dict]:
    phis = []
    for report in result.phi_reports:
        sides = []
        for side, record in zip(report.polygon.sides, report.residuals):
            field = record.residual.field
            sides.append(
                {
                    "start": list(side.start),
                    "end": list(side.end),
                    "slope": side.slope_str(),
                    "length": side.length,
                    "height": side.height,
                    "degree": side.ramification_degree,
                    "residual": {
                        "text": str(record.residual),
                        "coefficients": [
                            field.format_elem(c) for c in record.residual.coeffs
                        ],
                        "factors": [
                            {
                                "text": format_fq_poly(field, g),
                                "multiplicity": m,
                            }
                            for g, m in record.factors
                        ],
                        "squarefree": record.squarefree,
                    },
                }
            )
        phis.append(
            {
                "phi": str(report.phi),
                "multiplicity": report.multiplicity,
                "vertices": [list(v) for v in report.polygon.vertices],
                "sides": sides,
                "index_contribution": report.index_contribution,
                "regular": report.regular,
            }
        )
    return phis


def _analyze_payload(report: MonogenityReport) -> dict:
    return {
        "schema": _schema("analyze"),
        "polynomial": _poly_payload(report.f),
        "degree": report.f.degree,
        "discriminant": _factorization_payload(report.disc_factorization),
        "ledger": [
            {
                "p": str(entry.p),
                "method": entry.method,
                "nu_index": _bound_payload(entry.nu_index),
                "splitting": _splitting_payload(entry.splitting),
            }
            for entry in report.ledger
        ],
        "verdict": report.verdict,
        "witnesses": [str(p) for p in report.witnesses],
        "index": {"value": str(report.index.value), "exact": report.index.exact},
        "field_discriminant": None if report.field_disc is None else str(report.field_disc),
        "common_index_divisors": [str(p) for p in report.common_index_divisors],
        "notes": list(report.notes),
    }


def _analyze_text(report: MonogenityReport) -> str:
    lines = [f"polynomial: {report.f}"]
    fact = report.disc_factorization
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in fact.factors]
    if fact.cofactor != 1:
        parts.append(f"[{fact.cofactor}]")
    lines.append(f"discriminant: {report.disc} = {' * '.join(parts) if parts else '1'}")
    lines.append("ledger:")
    for e in report.ledger:
        nu = f"nu={e.nu_index.value} ({'exact' if e.nu_index.exact else 'lower bound'})"
        split = f", splitting: {e.splitting}" if e.splitting is not None else ""
        lines.append(f"  p={e.p}: method={e.method}, {nu}{split}")
    verdict = report.verdict
    if report.witnesses:
        verdict += f" (witnesses: {', '.join(map(str, report.witnesses))})"
    lines.append(f"verdict: {verdict}")
    lines.append(
        f"index: {report.index.value} ({'exact' if report.index.exact else 'lower bound'})"
    )
    lines.append(
        "field discriminant: "
        + (str(report.field_disc) if report.field_disc is not None else "unknown")
    )
    cid = ", ".join(map(str, report.common_index_divisors)) or "none"
    lines.append(f"common index divisors: {cid}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Commands


def _parse_input_poly(text: str) -> IntPoly:
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise InputError(f"cannot parse polynomial: {exc}") from exc


def _effort(args) -> EffortConfig:
    if args.trial_limit is not None:
        return EffortConfig(trial_limit=args.trial_limit)
    return EffortConfig()


def cmd_analyze(args) -> tuple[int, dict, str]:
    f = _parse_input_poly(args.polynomial)
    try:
        report = analyze(f, effort=_effort(args), seed=args.seed)
    except (ReduciblePolynomialError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    code = 0 if report.verdict in (MONOGENIC, NOT_MONOGENIC) else 1
    return code, _analyze_payload(report), _analyze_text(report)


def cmd_dedekind(args) -> tuple[int, dict, str]:
    f = _parse_input_poly(args.polynomial)
    if not is_prime(args.p):
        raise InputError(f"{args.p} is not prime")
    try:
        result = dedekind_test(f, args.p, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = {
        "schema": _schema("dedekind"),
        "polynomial": _poly_payload(f),
        "p": str(args.p),
        "divides_index": result.divides_index,
        "witness": None if result.witness is None else str(result.witness),
        "splitting": _splitting_payload(result.splitting),
    }
    if result.divides_index:
        text = (
            f"p={args.p} divides the index of {f}\n"
            f"witness factor: {result.witness}"
        )
    else:
        text = (
            f"p={args.p} does not divide the index of {f}\n"
            f"splitting: {result.splitting}"
        )
    return 0, payload, text


def cmd_polygon(args) -> tuple[int, dict, str]:
    f = _parse_input_poly(args.polynomial)
    if not is_prime(args.p):
        raise InputError(f"{args.p} is not prime")
    if not f.is_monic:
        raise InputError("polynomial must be monic")
    try:
        result = ore_analysis(f, args.p, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.phi is not None:
        phi = _parse_input_poly(args.phi)
        phibar = phi.reduce(args.p)
        if phibar.is_zero or not phibar.is_irreducible():
            raise InputError(f"phi = {args.phi} is not irreducible mod {args.p}")
        wanted = phibar.monic().lift()
        reports = tuple(r for r in result.phi_reports if r.phi == wanted)
        if not reports:
            raise InputError(f"phi = {args.phi} does not divide f mod {args.p}")
        result = OreResult(p=result.p, phi_reports=reports, bound=result.bound)
    payload = {
        "schema": _schema("polygon"),
        "polynomial": _poly_payload(f),
        "p": str(args.p),
        "phis": _ore_payload(result),
        "nu_index": _bound_payload(result.bound),
        "regular": result.regular,
    }
    lines = [f"polynomial: {f}   p = {args.p}"]
    for report in result.phi_reports:
        lines.append(
            f"phi = {report.phi} (multiplicity {report.multiplicity}), "
            f"ind_phi = {report.index_contribution}, "
            f"{'regular' if report.regular else 'NOT regular'}"
        )
        for side, record in zip(report.polygon.sides, report.residuals):
            factors = ", ".join(
                f"({format_fq_poly(record.residual.field, g)})^{m}"
                if m > 1
                else format_fq_poly(record.residual.field, g)
                for g, m in record.factors
            )
            lines.append(
                f"  side {side.start} -> {side.end}: slope {side.slope_str()}, "
                f"residual {record.residual} = {factors}"
            )
        lines.append(polygon_sketch(report.polygon.sides))
    lines.append(
        f"nu_{args.p}(ind f) {'=' if result.bound.exact else '>='} {result.bound.value}"
    )
    if args.plot:
        from .plotting import render_polygon_figure

        render_polygon_figure(result, str(f), args.plot)
        payload["plot"] = args.plot
        lines.append(f"figure written to {args.plot}")
    return 0, payload, "\n".join(lines)


def cmd_quartic(args) -> tuple[int, dict, str]:
    f = _parse_input_poly(args.polynomial)
    if f.degree != 4 or not f.is_monic:
        raise InputError("polynomial must be a monic quartic")
    effort = _effort(args)
    try:
        field_disc = None
        n_xi = args.n_xi
        report = None
        if n_xi is None or args.verify:
            report = analyze(f, effort=effort, seed=args.seed)
            field_disc = report.field_disc
        if n_xi is None:
            if report is None or not report.index.exact:
                raise InputError(
                    "index of f could not be certified; pass --n-xi explicitly"
                )
            n_xi = report.index.value
        setup = QuarticSetup(f, d=args.d, n_xi=n_xi, m=args.m)
    except ReduciblePolynomialError as exc:
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    if args.bound is not None:
        bounds = SearchBounds(
            cubic_box=args.bound,
            pq_box=args.bound,
            q0_box=min(args.bound, 100),
            direct_box=min(args.bound, 100),
        )
    else:
        bounds = SearchBounds()
    search = search_generators(setup, bounds)

    solutions = []
    for sol in search.solutions:
        verified = None
        if field_disc is not None:
            verified = index_of_element(f, sol.triple, setup.d, field_disc) == setup.m
        solutions.append({"xyz": [str(c) for c in sol.triple], "index_verified": verified})
    payload = {
        "schema": _schema("quartic"),
        "polynomial": _poly_payload(f),
        "m": args.m,
        "d": setup.d,
        "n_xi": setup.n_xi,
        "i_m": str(setup.i_m),
        "resolvent": {
            "text": str(search.resolvent),
            "coefficients": [str(c) for c in search.resolvent.coeffs],
            "reducible": search.resolvent_reducible,
        },
        "bounds": {
            "cubic_box": bounds.cubic_box,
            "pq_box": bounds.pq_box,
            "q0_box": bounds.q0_box,
            "direct_box": bounds.direct_box,
        },
        "branches": [
            {
                "u": b.uv[0],
                "v": b.uv[1],
                "sign": b.sign,
                "base": None if b.base is None else list(b.base),
                "method": b.method,
                "k_divisors": list(b.parametrization.k_divisors)
                if b.parametrization is not None
                else None,
                "thue_forms": None
                if b.thue_forms is None
                else [str(b.thue_forms[0]), str(b.thue_forms[1])],
                "solutions": [list(s.triple) for s in b.solutions],
            }
            for b in search.branches
        ],
        "solutions": solutions,
        "field_discriminant": None if field_disc is None else str(field_disc),
    }
    lines = [
        f"polynomial: {f}   m = {args.m}, d = {setup.d}, n_xi = {setup.n_xi}, i_m = {setup.i_m}",
        f"resolvent cubic: F(u, v) = {search.resolvent}"
        + (
            "  (reducible over Q)"
            if search.resolvent_reducible
            else ""
        ),
        f"(u, v) branches inside box {bounds.cubic_box}: {len(search.branches)}",
    ]
    for b in search.branches:
        sols = ", ".join(str(s.triple) for s in b.solutions) or "none"
        lines.append(f"  (u, v) = {b.uv} via {b.method}: {sols}")
    lines.append(f"generators up to equivalence: {len(search.solutions)}")
    for entry in solutions:
        xyz = tuple(int(c) for c in entry["xyz"])
        mark = {True: " [index verified]", False: " [INDEX MISMATCH]", None: ""}[
            entry["index_verified"]
        ]
        lines.append(f"  {xyz}{mark}")
    return 0, payload, "\n".join(lines)


def _parse_range(text: str) -> range:
    try:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise InputError(f"bad range {text!r}; expected A..B") from exc
    if hi < lo:
        raise InputError(f"bad range {text!r}; expected A..B with A <= B")
    return range(lo, hi + 1)


def cmd_corpus(args) -> tuple[int, dict, str]:
    effort = _effort(args)
    rows = []
    if args.family == FAMILY_XN_X_1:
        values = _parse_range(args.n if args.n else "2..9")
        instances = [("n", n, family_oracle(FAMILY_XN_X_1, effort=effort, n=n)) for n in values]
    elif args.family == FAMILY_BINOMIAL_12:
        values = _parse_range(args.m if args.m else "-50..50")
        instances = [
            ("m", m, family_oracle(FAMILY_BINOMIAL_12, effort=effort, m=m))
            for m in values
            if abs(m) >= 2
        ]
    else:
        raise InputError(f"unknown family {args.family!r}")

    mismatches = 0
    skipped = 0
    checked = 0
    for name, value, oracle in instances:
        if oracle.verdict == ORACLE_NOT_APPLICABLE or oracle.polynomial is None:
            skipped += 1
            rows.append(
                {
                    "param": {name: value},
                    "polynomial": None if oracle.polynomial is None else str(oracle.polynomial),
                    "analyze": None,
                    "oracle": oracle.verdict,
                    "match": None,
                }
            )
            continue
        report = analyze(oracle.polynomial, effort=effort, seed=args.seed)
        match = report.verdict == oracle.verdict
        checked += 1
        if not match:
            mismatches += 1
        rows.append(
            {
                "param": {name: value},
                "polynomial": str(oracle.polynomial),
                "analyze": report.verdict,
                "oracle": oracle.verdict,
                "match": match,
            }
        )
    payload = {
        "schema": _schema("corpus"),
        "family": args.family,
        "rows": rows,
        "checked": checked,
        "skipped": skipped,
        "mismatches": mismatches,
    }
    lines = [f"family: {args.family}"]
    for row in rows:
        (name, value), = row["param"].items()
        if row["match"] is None:
            lines.append(f"  {name}={value}: skipped ({row['oracle']})")
        else:
            flag = "ok" if row["match"] else "MISMATCH"
            lines.append(
                f"  {name}={value}: analyze={row['analyze']} oracle={row['oracle']} {flag}"
            )
    lines.append(f"checked {checked}, skipped {skipped}, mismatches {mismatches}")
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["param", "value", "polynomial", "analyze", "oracle", "match"])
            for row in rows:
                (name, value), = row["param"].items()
                writer.writerow(
                    [
                        name,
                        value,
                        row["polynomial"] or "",
                        row["analyze"] or "",
                        row["oracle"],
                        "" if row["match"] is None else str(row["match"]).lower(),
                    ]
                )
        lines.append(f"csv written to {args.csv}")
        payload["csv"] = args.csv
    return (1 if mismatches else 0), payload, "\n".join(lines)


# ---------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a global flag given before the subcommand from being
    # clobbered by the subparser's own default for the same option.
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--bound", type=int, help="search box size")
    common.add_argument("--trial-limit", type=int, help="trial division limit")
    common.add_argument("--seed", type=int, help="factorization seed")

    parser = argparse.ArgumentParser(
        prog="monogen",
        description="Monogenity of integer polynomials and power integral bases",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", parents=[common], help="monogenity verdict")
    p_analyze.add_argument("polynomial")
    p_analyze.set_defaults(func=cmd_analyze)

    p_dedekind = sub.add_parser(
        "dedekind", parents=[common], help="Dedekind index criterion at p"
    )
    p_dedekind.add_argument("polynomial")
    p_dedekind.add_argument("-p", type=int, required=True, help="prime")
    p_dedekind.set_defaults(func=cmd_dedekind)

    p_polygon = sub.add_parser(
        "polygon", parents=[common], help="Newton polygon report at p"
    )
    p_polygon.add_argument("polynomial")
    p_polygon.add_argument("-p", type=int, required=True, help="prime")
    p_polygon.add_argument("--phi", default=None, help="restrict to one factor")
    p_polygon.add_argument("--plot", default=None, help="write a figure to this file")
    p_polygon.set_defaults(func=cmd_polygon)

    p_quartic = sub.add_parser(
        "quartic", parents=[common], help="power integral basis generators"
    )
    p_quartic.add_argument("polynomial")
    p_quartic.add_argument("-m", type=int, default=1, help="index target")
    p_quartic.add_argument("-d", type=int, default=1, help="common denominator")
    p_quartic.add_argument("--n-xi", type=int, default=None, help="index of xi")
    p_quartic.add_argument(
        "--no-verify",
        dest="verify",
        action="store_false",
        help="skip the discriminant oracle check of each solution",
    )
    p_quartic.set_defaults(func=cmd_quartic, verify=True)

    p_corpus = sub.add_parser(
        "corpus", parents=[common], help="sweep a family against its oracle"
    )
    p_corpus.add_argument("family")
    p_corpus.add_argument("--n", default=None, help="range A..B for n")
    p_corpus.add_argument("--m", default=None, help="range A..B for m")
    p_corpus.add_argument("--csv", default=None, help="write rows to a CSV file")
    p_corpus.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.bound = getattr(args, "bound", None)
    args.trial_limit = getattr(args, "trial_limit", None)
    args.seed = getattr(args, "seed", 0)
    try:
        code, payload, text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
