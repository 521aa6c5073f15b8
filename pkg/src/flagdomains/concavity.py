"""Sufficient pseudoconcavity test for flag domains.

The criterion asks for a single compact root b such that, for every
noncompact root a of negative grading, the b-string through a is either
{a, a+b} with a+b in the parabolic or {a, a+b, a+2b} with a+2b in the
parabolic. The checker sweeps compact roots of both signs and keeps the
full per-root verdict trail, so a concrete witness is available to the
downstream matrix certificates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .realform import classify_roots, noncompact_negative_roots
from .rootsys import (
    GradingElement,
    Root,
    RootSystem,
    check_grading,
    root_string,
)


class VerdictKind(str, Enum):
    TYPE_A = "OK_TYPE_A"
    TYPE_B = "OK_TYPE_B"
    FAIL = "FAIL"


@dataclass(frozen=True)
class StringVerdict:
    """Outcome of the string condition for one (alpha, beta) pair."""

    alpha: Root
    beta: Root
    r: int
    q: int
    endpoint: Root
    endpoint_in_p: bool
    verdict: VerdictKind
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "alpha": list(self.alpha.coeffs),
            "r": self.r,
            "q": self.q,
            "endpoint": list(self.endpoint.coeffs),
            "endpoint_in_p": self.endpoint_in_p,
            "verdict": self.verdict.value,
            "reason": self.reason,
        }


@dataclass(frozen=True, eq=False)
class ConcavityReport:
    """Verdict of the sweep, with every witness and the full detail map."""

    satisfied: bool
    witnesses: tuple[Root, ...]
    noncompact_negatives: tuple[Root, ...]
    detail: dict

    def to_json_dict(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "witnesses": [list(b.coeffs) for b in self.witnesses],
            "noncompact_negatives": [
                list(a.coeffs) for a in self.noncompact_negatives
            ],
            "detail": [
                {
                    "beta": list(b.coeffs),
                    "is_witness": b in self.witnesses,
                    "verdicts": [v.to_json_dict() for v in verdicts],
                }
                for b, verdicts in sorted(
                    self.detail.items(), key=lambda kv: kv[0].coeffs
                )
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def analyze_string_condition(
    rs: RootSystem, e: GradingElement, beta: Root, alpha: Root
) -> StringVerdict:
    """Classify the beta-string through alpha against the two allowed shapes."""
    check_grading(rs, e)
    rs.check_member(beta)
    rs.check_member(alpha)
    if e.value(beta) % 2 != 0:
        raise ValueError(f"beta {beta} is not compact for this grading")
    va = e.value(alpha)
    if va % 2 == 0 or va >= 0:
        raise ValueError(
            f"alpha {alpha} is not a noncompact root of negative grading"
        )
    st = root_string(rs, alpha, beta)
    endpoint = alpha + st.q * beta
    endpoint_in_p = e.value(endpoint) >= 0
    if (st.r, st.q) == (0, 1):
        if endpoint_in_p:
            verdict, reason = VerdictKind.TYPE_A, None
        else:
            verdict, reason = VerdictKind.FAIL, "endpoint a+b has negative grading"
    elif (st.r, st.q) == (0, 2):
        if endpoint_in_p:
            verdict, reason = VerdictKind.TYPE_B, None
        else:
            verdict, reason = VerdictKind.FAIL, "endpoint a+2b has negative grading"
    else:
        verdict, reason = VerdictKind.FAIL, f"string shape (r, q) = ({st.r}, {st.q})"
    return StringVerdict(
        alpha=alpha,
        beta=beta,
        r=st.r,
        q=st.q,
        endpoint=endpoint,
        endpoint_in_p=endpoint_in_p,
        verdict=verdict,
        reason=reason,
    )


def check_pseudoconcavity(rs: RootSystem, e: GradingElement) -> ConcavityReport:
    """Sweep all compact roots for one that certifies every noncompact
    negative root, and report the witnesses with full detail."""
    check_grading(rs, e)
    if e.is_zero:
        raise ValueError("trivial grading defines no proper parabolic")
    if any(n < 0 for n in e.coeffs):
        raise ValueError("grading coefficients must be nonnegative")
    table = classify_roots(rs, e)
    alphas = sorted(
        noncompact_negative_roots(rs, e), key=lambda a: (a.height, a.coeffs)
    )
    detail: dict[Root, tuple[StringVerdict, ...]] = {}
    witnesses = []
    for beta in sorted(table.compact, key=lambda b: (b.height, b.coeffs)):
        verdicts = tuple(
            analyze_string_condition(rs, e, beta, alpha) for alpha in alphas
        )
        detail[beta] = verdicts
        if all(v.verdict is not VerdictKind.FAIL for v in verdicts):
            witnesses.append(beta)
    return ConcavityReport(
        satisfied=bool(witnesses),
        witnesses=tuple(witnesses),
        noncompact_negatives=tuple(alphas),
        detail=detail,
    )
