"""Command line front end emitting deterministic JSON reports.

Subcommands: describe, theorem1, period, verify, levi. Output is JSON on
stdout (one document, or one JSON line per check for verify); --pretty
switches to a human readable rendering. Exit codes: 0 analysis ran
(whatever the verdict), 2 bad request, 3 malformed JSON, 4 parameter out
of bounds, 5 infeasible degeneration shape.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chevalley import jacobi_violations, structure_constants, verify_bracket_identities
from .concavity import check_pseudoconcavity
from .hodge import (
    DegenerationSpec,
    HodgeNumbers,
    InfeasibleDegeneration,
    period_report,
    sl2_cayley_checks,
)
from .leviform import DefiningFunction, levi_analyze
from .matrixrep import (
    eligible_conjugation_pairs,
    fundamental_rep,
    verify_cayley_conjugation,
    verify_fixed_point,
)
from .realform import classify_roots
from .rootsys import LieType, build_root_system, from_cartan_matrix, grading

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_JSON = 3
EXIT_OUT_OF_BOUNDS = 4
EXIT_INFEASIBLE = 5

MAX_RANK = 6
MAX_WEIGHT = 10
MAX_DIM_V = 64
MAX_GRADING = 16
MAX_LEVI_N = 16

VERIFY_SUITES = ("all", "chevalley", "prop33", "lemma41", "fixed-point")

_DEFAULT_CHEVALLEY = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("D", 4))
_DEFAULT_CONJUGATION = (("A", 2), ("A", 3), ("B", 2), ("C", 2))
_DEFAULT_FIXED_POINT = ((("A", 2), (1, 1)), (("C", 2), (1, 0)))
_DEFAULT_EPS = (0.01, 0.1, 1.0)


class OutOfBoundsError(ValueError):
    pass


class BadJSONError(ValueError):
    pass


def _parse_json(text: str, where: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadJSONError(f"malformed JSON in {where}: {exc}") from exc


def _load_input(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read input file {path}: {exc}") from exc
    data = _parse_json(text, path)
    if not isinstance(data, dict):
        raise BadJSONError(f"input file {path} must hold a JSON object")
    return data


def _merged(args: argparse.Namespace, keys: tuple[str, ...]) -> dict:
    """Flag values, with the --input file supplying anything left unset."""
    merged = {k: getattr(args, k, None) for k in keys}
    if getattr(args, "input", None):
        fromfile = _load_input(args.input)
        for k in keys:
            if merged[k] is None and k in fromfile:
                merged[k] = fromfile[k]
    return merged


def _parse_int_list(value, what: str) -> tuple[int, ...]:
    if value is None:
        raise ValueError(f"missing {what}")
    if isinstance(value, str):
        parts = [p for p in value.replace(" ", "").split(",") if p]
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"{what} must be a comma separated integer list") from exc
    return tuple(int(v) for v in value)


def _resolve_system(spec: dict):
    family = spec.get("family")
    rank = spec.get("rank")
    cartan = spec.get("cartan")
    if cartan is not None:
        if isinstance(cartan, str):
            cartan = _parse_json(cartan, "--cartan")
        rs = from_cartan_matrix(cartan)
        if rank is not None and int(rank) != rs.rank:
            raise ValueError("--rank disagrees with the Cartan matrix size")
    else:
        if family is None or rank is None:
            raise ValueError("need --family and --rank, or --cartan")
        rs = build_root_system(LieType(str(family).upper(), int(rank)))
    if rs.rank > MAX_RANK:
        raise OutOfBoundsError(f"rank {rs.rank} exceeds the bound {MAX_RANK}")
    return rs


def _resolve_grading(rs, spec: dict):
    coeffs = _parse_int_list(spec.get("grading"), "--grading")
    if len(coeffs) != rs.rank:
        raise ValueError(
            f"grading has {len(coeffs)} coefficients, the system has rank {rs.rank}"
        )
    if any(abs(c) > MAX_GRADING for c in coeffs):
        raise OutOfBoundsError(f"grading coefficients must stay within {MAX_GRADING}")
    return grading(coeffs)


def _emit(args, payload, pretty_lines=None) -> None:
    if getattr(args, "pretty", False) and pretty_lines is not None:
        for line in pretty_lines:
            print(line)
    else:
        print(json.dumps(payload, sort_keys=True))


def _cmd_describe(args) -> int:
    spec = _merged(args, ("family", "rank", "cartan"))
    rs = _resolve_system(spec)
    payload = rs.to_json_dict()
    pretty = [
        f"family: {payload['family']}  rank: {payload['rank']}",
        f"roots ({len(payload['roots'])}):",
    ]
    pretty.extend("  " + ",".join(str(c) for c in row) for row in payload["roots"])
    _emit(args, payload, pretty)
    return EXIT_OK


def _cmd_theorem1(args) -> int:
    spec = _merged(args, ("family", "rank", "cartan", "grading"))
    rs = _resolve_system(spec)
    e = _resolve_grading(rs, spec)
    report = check_pseudoconcavity(rs, e)
    table = classify_roots(rs, e)
    payload = report.to_json_dict()
    payload["grading"] = list(e.coeffs)
    payload["compact_roots"] = sorted(list(a.coeffs) for a in table.compact)
    payload["noncompact_roots"] = sorted(list(a.coeffs) for a in table.noncompact)
    pretty = [
        f"satisfied: {report.satisfied}",
        "witnesses: "
        + (", ".join(str(b) for b in report.witnesses) or "(none)"),
        "noncompact negatives: "
        + ", ".join(str(a) for a in report.noncompact_negatives),
    ]
    _emit(args, payload, pretty)
    return EXIT_OK


def _cmd_period(args) -> int:
    spec = _merged(args, ("weight", "h", "degeneration"))
    if spec.get("weight") is None:
        raise ValueError("missing --weight")
    weight = int(spec["weight"])
    if not 0 <= weight <= MAX_WEIGHT:
        raise OutOfBoundsError(f"weight must lie in [0, {MAX_WEIGHT}]")
    hvals = _parse_int_list(spec.get("h"), "--h")
    h = HodgeNumbers.from_descending(weight, hvals)
    if h.dim() > MAX_DIM_V:
        raise OutOfBoundsError(f"total dimension exceeds the bound {MAX_DIM_V}")
    only = None
    if spec.get("degeneration") is not None:
        deg = spec["degeneration"]
        if isinstance(deg, str):
            deg = _parse_json(deg, "--degeneration")
        only = DegenerationSpec(kind=deg.get("kind"), p0=deg.get("p0"))
    payload = period_report(h, only)
    pretty = [
        f"group: {payload['group']['family']} {tuple(payload['group']['parameters'])}"
        f"  isotropy: {payload['group']['isotropy']}",
    ]
    if payload["group"]["note"]:
        pretty.append(f"note: {payload['group']['note']}")
    for entry in payload["degenerations"]:
        b = entry["boundary"]
        verdict = f"met at p={b['witness_p']}" if b["condition_met"] else "not met"
        kind = entry["spec"]["kind"]
        p0 = entry["spec"]["p0"]
        label = f"type {kind}" + (f" p0={p0}" if p0 is not None else "")
        pretty.append(f"{label}: boundary condition {verdict}")
    _emit(args, payload, pretty)
    return EXIT_OK


def _verify_systems(args):
    spec = _merged(args, ("family", "rank", "cartan", "grading"))
    if spec.get("family") is not None or spec.get("cartan") is not None:
        return [(_resolve_system(spec), spec)]
    return None


def _iter_verify_checks(args):
    suite = args.suite
    custom = _verify_systems(args)
    if suite in ("all", "chevalley"):
        systems = (
            [rs for rs, _ in custom]
            if custom
            else [build_root_system(LieType(f, r)) for f, r in _DEFAULT_CHEVALLEY]
        )
        for rs in systems:
            name = str(rs.lie_type) if rs.lie_type else f"rank{rs.rank}"
            cc = structure_constants(rs)
            report = verify_bracket_identities(cc)
            yield {
                "claim": f"chevalley-string-brackets {name}",
                "residual": float(len(report.violations)),
                "tolerance": 0.5,
                "pass": report.ok,
                "sign": None,
                "info": {"pairs": len(report.entries)},
            }
            bad = jacobi_violations(cc)
            yield {
                "claim": f"chevalley-jacobi {name}",
                "residual": float(len(bad)),
                "tolerance": 0.5,
                "pass": not bad,
                "sign": None,
                "info": None,
            }
    if suite in ("all", "prop33"):
        systems = (
            [rs for rs, _ in custom]
            if custom
            else [build_root_system(LieType(f, r)) for f, r in _DEFAULT_CONJUGATION]
        )
        for rs in systems:
            rep = fundamental_rep(rs)
            for a, b in eligible_conjugation_pairs(rs):
                yield verify_cayley_conjugation(rep, a, b).to_json_dict()
    if suite in ("all", "lemma41"):
        for kind in ("I", "II"):
            for check in sl2_cayley_checks(kind):
                yield check.to_json_dict()
    if suite in ("all", "fixed-point"):
        eps_values = _DEFAULT_EPS
        if getattr(args, "eps", None):
            eps_values = tuple(float(v) for v in str(args.eps).split(","))
        if custom:
            rs, spec = custom[0]
            if spec.get("grading") is None and suite == "all":
                targets = []
            else:
                targets = [(rs, _resolve_grading(rs, spec))]
        else:
            targets = [
                (build_root_system(LieType(f, r)), grading(g))
                for (f, r), g in _DEFAULT_FIXED_POINT
            ]
        for rs, e in targets:
            report = check_pseudoconcavity(rs, e)
            name = str(rs.lie_type) if rs.lie_type else f"rank{rs.rank}"
            if not report.witnesses:
                yield {
                    "claim": f"fixed-point witness exists {name} grading {list(e.coeffs)}",
                    "residual": 1.0,
                    "tolerance": 0.5,
                    "pass": False,
                    "sign": None,
                    "info": None,
                }
                continue
            rep = fundamental_rep(rs)
            for beta in report.witnesses:
                for eps in eps_values:
                    yield verify_fixed_point(rep, e, beta, eps).to_json_dict()


def _cmd_verify(args) -> int:
    for check in _iter_verify_checks(args):
        if args.pretty:
            status = "PASS" if check["pass"] else "FAIL"
            print(f"{status} {check['claim']} (residual={check['residual']:.3e})")
        else:
            print(json.dumps(check, sort_keys=True))
    return EXIT_OK


def _cmd_levi(args) -> int:
    if args.input:
        data = _load_input(args.input)
    elif args.spec:
        data = _parse_json(args.spec, "--spec")
    else:
        raise ValueError("levi needs --input FILE or --spec JSON")
    if not isinstance(data, dict):
        raise BadJSONError("levi input must be a JSON object")
    n = int(data.get("n", 0))
    if not 1 <= n <= MAX_LEVI_N:
        raise OutOfBoundsError(f"dimension n must lie in [1, {MAX_LEVI_N}]")
    z0_raw = data.get("z0")
    if z0_raw is None or len(z0_raw) != n:
        raise ValueError("z0 must be a length-n list of [re, im] pairs or numbers")
    z0 = [
        complex(v[0], v[1]) if isinstance(v, (list, tuple)) else complex(v)
        for v in z0_raw
    ]
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise ValueError("terms must be a list of monomial objects")
    f = DefiningFunction.from_polynomial(n, z0, terms)
    report = levi_analyze(f)
    payload = report.to_json_dict()
    pretty = [
        "eigenvalues: " + ", ".join(f"{v:.6g}" for v in report.eigenvalues),
        f"negatives: {report.negatives}",
        f"pseudoconcave point: {report.pseudoconcave_point}",
    ]
    _emit(args, payload, pretty)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seedless",
        action="store_true",
        help="accepted for compatibility; output is always deterministic",
    )
    parser = argparse.ArgumentParser(
        prog="flagdomains",
        description="Root system pseudoconcavity checks and period domain reports",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    def add_system_flags(p):
        p.add_argument("--family", help="A, B, C or D")
        p.add_argument("--rank", type=int)
        p.add_argument("--cartan", help="explicit Cartan matrix as JSON")
        p.add_argument("--input", help="JSON file mirroring the flags")
        p.add_argument("--pretty", action="store_true")

    p = add_parser("describe", "dump a root system as JSON")
    add_system_flags(p)
    p.set_defaults(handler=_cmd_describe)

    p = add_parser("theorem1", "pseudoconcavity criterion report")
    add_system_flags(p)
    p.add_argument("--grading", help="comma separated grading coefficients")
    p.set_defaults(handler=_cmd_theorem1)

    p = add_parser("period", "period domain group and degenerations")
    p.add_argument("--weight", type=int)
    p.add_argument("--h", help="h^{n,0},...,h^{0,n} comma separated")
    p.add_argument("--degeneration", help='e.g. {"kind": "I", "p0": 1}')
    p.add_argument("--input", help="JSON file mirroring the flags")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(handler=_cmd_period)

    p = add_parser("verify", "numeric certificate suites as JSON lines")
    add_system_flags(p)
    p.add_argument("--suite", choices=VERIFY_SUITES, default="all")
    p.add_argument("--grading", help="grading for the fixed-point suite")
    p.add_argument("--eps", help="comma separated eps list for the fixed-point suite")
    p.set_defaults(handler=_cmd_verify)

    p = add_parser("levi", "Levi form eigenvalues of a polynomial")
    p.add_argument("--input", help="JSON file with n, z0 and terms")
    p.add_argument("--spec", help="the same JSON object inline")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(handler=_cmd_levi)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BadJSONError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_JSON
    except OutOfBoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_BOUNDS
    except InfeasibleDegeneration as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
