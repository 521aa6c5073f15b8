"""Period-domain bookkeeping for polarized Hodge structures.

Covers the symmetry group determined by the Hodge numbers, the grading
eigenvalues on the underlying space, limit mixed Hodge diamonds of the
two minimal degeneration types, the boundary pseudoconcavity condition
on those diamonds, and numeric verification of the closed forms for the
quarter-turn Cayley element built from an sl2 triple.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import expm

from .matrixrep import NumericCheck, make_check

TOL_SL2 = 1e-12


class InfeasibleDegeneration(ValueError):
    """The degeneration kind cannot occur for the given Hodge numbers."""


@dataclass(frozen=True)
class HodgeNumbers:
    """Hodge numbers of one weight; h[p] is the dimension in bidegree (p, n-p)."""

    weight: int
    h: tuple[int, ...]

    def __post_init__(self):
        n = self.weight
        if n < 0:
            raise ValueError("weight must be nonnegative")
        if len(self.h) != n + 1:
            raise ValueError(f"need {n + 1} Hodge numbers for weight {n}")
        if any(v < 0 for v in self.h):
            raise ValueError("Hodge numbers must be nonnegative")
        if sum(self.h) <= 0:
            raise ValueError("total dimension must be positive")
        for p in range(n + 1):
            if self.h[p] != self.h[n - p]:
                raise ValueError("Hodge numbers must be conjugation symmetric")

    @classmethod
    def from_descending(cls, weight: int, values) -> "HodgeNumbers":
        """Build from [h^{n,0}, ..., h^{0,n}] as used on the command line."""
        vals = tuple(int(v) for v in values)
        return cls(weight=weight, h=tuple(reversed(vals)))

    def hp(self, p: int) -> int:
        if 0 <= p <= self.weight:
            return self.h[p]
        return 0

    def dim(self) -> int:
        return sum(self.h)


@dataclass(frozen=True)
class GroupDescriptor:
    """The real symmetry group of the period domain and its isotropy."""

    family: str
    parameters: tuple[int, ...]
    isotropy: str
    trivial: bool = False
    note: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "parameters": list(self.parameters),
            "isotropy": self.isotropy,
            "trivial": self.trivial,
            "note": self.note,
        }


_ORTHOGONAL_LABEL_NOTE = (
    "some sources label this example SO(2,1); the even-weight formula gives "
    "m_ev = 4, m_od = 1, hence SO(4,1), whose quotient by U(2) has complex "
    "dimension 3, matching the count of negatively graded roots"
)


def group_of_period_domain(h: HodgeNumbers) -> GroupDescriptor:
    """Symplectic group for odd weight, indefinite orthogonal for even."""
    n = h.weight
    k = n // 2
    if n % 2 == 1:
        dim = h.dim()
        if dim % 2 != 0:
            raise ValueError("odd weight needs an even-dimensional space")
        factors = [f"U({h.hp(p)})" for p in range(n, k, -1)]
        return GroupDescriptor(
            family="symplectic",
            parameters=(dim // 2,),
            isotropy=" x ".join(factors),
        )
    m_ev = sum(h.hp(p) for p in range(0, n + 1) if p % 2 == 0)
    m_od = sum(h.hp(p) for p in range(0, n + 1) if p % 2 == 1)
    factors = [f"U({h.hp(p)})" for p in range(n, k, -1)]
    factors.append(f"SO({h.hp(k)})")
    note = None
    if n == 2 and (h.hp(2), h.hp(1)) == (2, 1):
        note = _ORTHOGONAL_LABEL_NOTE
    return GroupDescriptor(
        family="indefinite-orthogonal",
        parameters=(m_ev, m_od),
        isotropy=" x ".join(factors),
        trivial=(n == 0),
        note=note,
    )


def grading_values_on_V(h: HodgeNumbers) -> dict[int, Fraction]:
    """Eigenvalue (2p - n)/2 of the Hodge grading element in bidegree (p, n-p)."""
    n = h.weight
    return {p: Fraction(2 * p - n, 2) for p in range(n + 1)}


def weight_eigenvalues(h: HodgeNumbers) -> tuple[Fraction, ...]:
    """Grading eigenvalues repeated with multiplicity, descending."""
    values = grading_values_on_V(h)
    out: list[Fraction] = []
    for p in range(h.weight, -1, -1):
        out.extend([values[p]] * h.hp(p))
    return tuple(out)


@dataclass(frozen=True)
class DegenerationSpec:
    """A minimal degeneration shape: type I with a pivot p0, or type II."""

    kind: str
    p0: int | None = None

    def __post_init__(self):
        if self.kind not in ("I", "II"):
            raise ValueError("kind must be 'I' or 'II'")
        if self.kind == "I" and self.p0 is None:
            raise ValueError("type I needs a pivot p0")
        if self.kind == "II" and self.p0 is not None:
            raise ValueError("type II takes no pivot")

    def label(self) -> str:
        return f"I(p0={self.p0})" if self.kind == "I" else "II"

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "p0": self.p0}


def validate_spec(h: HodgeNumbers, d: DegenerationSpec) -> None:
    """Raise InfeasibleDegeneration unless the shape fits the Hodge numbers."""
    n = h.weight
    if d.kind == "I":
        if 2 * d.p0 >= n:
            raise InfeasibleDegeneration(f"type I needs 2*p0 < n, got p0={d.p0}")
        if h.hp(d.p0) < 1 or h.hp(d.p0 + 1) < 1:
            raise InfeasibleDegeneration(
                f"type I with p0={d.p0} needs h^{{{d.p0},{n - d.p0}}} and "
                f"h^{{{d.p0 + 1},{n - d.p0 - 1}}} at least 1"
            )
        if n == 2 * d.p0 + 2 and h.hp(d.p0 + 1) < 2:
            # both chain images d(I^{p0+1,n-p0}) and d(I^{n-p0-1,p0}) land in
            # the center class V^{n/2,n/2}, so it must hold two dimensions
            raise InfeasibleDegeneration(
                f"type I with p0={d.p0} and weight {n} needs "
                f"h^{{{d.p0 + 1},{d.p0 + 1}}} >= 2"
            )
        return
    if n % 2 != 0:
        raise InfeasibleDegeneration("type II needs an even weight")
    m = n // 2
    # the length-three chain occupies one dimension of h^{m-1,m+1} and one
    # of h^{m,m}, so both must be nonzero
    if h.hp(m - 1) < 1:
        raise InfeasibleDegeneration(f"type II needs h^{{{m - 1},{m + 1}}} >= 1")
    if h.hp(m) < 1:
        raise InfeasibleDegeneration(f"type II needs h^{{{m},{m}}} >= 1")


@dataclass(frozen=True, eq=False)
class DeligneDiamond:
    """Dimensions i^{p,q} of the Deligne bigrading of a limit mixed structure."""

    weight: int
    entries: dict
    rank_nilpotent: int

    def i(self, p: int, q: int) -> int:
        return self.entries.get((p, q), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json_dict(self) -> dict:
        return {
            "weight": self.weight,
            "entries": {
                f"{p},{q}": v for (p, q), v in sorted(self.entries.items())
            },
            "rank_N": self.rank_nilpotent,
        }


def limit_diamond(h: HodgeNumbers, d: DegenerationSpec) -> DeligneDiamond:
    """Deligne diamond of the limit mixed structure of a minimal degeneration.

    The off-row classes and the two decremented row entries are fixed by
    the degeneration type; the rest of the weight row copies the Hodge
    numbers, and everything is completed by conjugation symmetry and the
    nilpotent chain pairing.
    """
    validate_spec(h, d)
    n = h.weight
    entries: dict[tuple[int, int], int] = {}

    def put(p: int, q: int, v: int) -> None:
        if v:
            entries[(p, q)] = v

    def row_value(p: int) -> int:
        # entries of the weight row for 2p <= n, before mirroring
        if d.kind == "I":
            drop = 1 if p in (d.p0, d.p0 + 1) else 0
            if n == 2 * d.p0 + 2 and p == d.p0 + 1:
                # the center hosts the chain image and its conjugate
                drop = 2
        else:
            drop = 1 if p == n // 2 - 1 else 0
            if p == n // 2:
                # the chain middle restores the center of the row
                return h.hp(p)
        return h.hp(p) - drop

    for p in range(0, n // 2 + 1):
        put(p, n - p, row_value(p))
    for p in range(n // 2 + 1, n + 1):
        put(p, n - p, entries.get((n - p, p), 0))

    if d.kind == "I":
        p0 = d.p0
        put(p0 + 1, n - p0, 1)
        put(n - p0, p0 + 1, 1)
        put(p0, n - p0 - 1, 1)
        put(n - p0 - 1, p0, 1)
        rank = 1 if n == 2 * p0 + 1 else 2
    else:
        m = n // 2
        put(m + 1, m + 1, 1)
        put(m - 1, m - 1, 1)
        rank = 2

    diamond = DeligneDiamond(weight=n, entries=entries, rank_nilpotent=rank)
    problems = validate_diamond(h, d, diamond)
    if problems:
        raise AssertionError("diamond construction broke an invariant: " + "; ".join(problems))
    return diamond


def validate_diamond(
    h: HodgeNumbers, d: DegenerationSpec, dia: DeligneDiamond
) -> list[str]:
    """Independent pass over the defining clauses and symmetries; empty means good."""
    n = h.weight
    problems = []
    if dia.total() != h.dim():
        problems.append(f"total {dia.total()} != dim {h.dim()}")
    for (p, q), v in dia.entries.items():
        if dia.i(q, p) != v:
            problems.append(f"conjugation symmetry fails at ({p},{q})")
        if dia.i(n - q, n - p) != v:
            problems.append(f"chain symmetry fails at ({p},{q})")
    if d.kind == "I":
        p0 = d.p0
        if dia.i(p0 + 1, n - p0) != 1 or dia.i(p0, n - p0 - 1) != 1:
            problems.append("clause (i) fails")
        if dia.i(p0, n - p0) != h.hp(p0) - 1:
            problems.append("clause (ii) fails at p0")
        # when n = 2 p0 + 2 the cell (p0+1, n-p0-1) is its own conjugate
        # partner, so it sheds two dimensions instead of one
        center_drop = 2 if n == 2 * p0 + 2 else 1
        if dia.i(p0 + 1, n - p0 - 1) != h.hp(p0 + 1) - center_drop:
            problems.append("clause (ii) fails at p0+1")
        for p in range(0, n + 1):
            if 2 * p < n and p not in (p0, p0 + 1):
                if dia.i(p, n - p) != h.hp(p):
                    problems.append(f"clause (iii) fails at p={p}")
    else:
        m = n // 2
        if dia.i(m - 1, m - 1) != 1 or dia.i(m + 1, m + 1) != 1:
            problems.append("clause (i) fails")
        if dia.i(m - 1, m + 1) != h.hp(m - 1) - 1:
            problems.append("clause (ii) fails at m-1")
        if dia.i(m + 1, m - 1) != h.hp(m + 1) - 1:
            problems.append("clause (ii) fails at m+1")
        for p in range(0, n + 1):
            if 2 * p < n and p != m - 1:
                if dia.i(p, n - p) != h.hp(p):
                    problems.append(f"clause (iii) fails at p={p}")
    return problems


@dataclass(frozen=True)
class BoundaryReport:
    """Scan result for the boundary pseudoconcavity condition."""

    condition_met: bool
    witness_p: int | None
    witness_ell: int | None

    def to_json_dict(self) -> dict:
        return {
            "condition_met": self.condition_met,
            "witness_p": self.witness_p,
            "witness_ell": self.witness_ell,
        }


def _candidate_ps(n: int, d: DegenerationSpec):
    """Admissible p values ordered by |ell|, positive branch first."""
    if d.kind == "I":
        for ell in range(1, n + 2):
            yield d.p0 + 2 * ell, ell
            yield d.p0 - 2 * ell + 1, ell
    else:
        m = n // 2
        yield m + 1, 0
        for ell in range(1, n + 2):
            yield m + 2 * ell + 1, ell
            yield m - 2 * ell + 1, -ell


def check_boundary_concavity(h: HodgeNumbers, d: DegenerationSpec) -> BoundaryReport:
    """Look for a nonzero weight-row entry at an admissible position.

    The weight row of the limit diamond is read on all of [0, n], the
    right half through conjugation symmetry; the witness with the
    smallest |ell| is returned.
    """
    dia = limit_diamond(h, d)
    n = h.weight
    for p, ell in _candidate_ps(n, d):
        if 0 <= p <= n and dia.i(p, n - p) != 0:
            return BoundaryReport(condition_met=True, witness_p=p, witness_ell=ell)
    return BoundaryReport(condition_met=False, witness_p=None, witness_ell=None)


def enumerate_minimal_degenerations(
    h: HodgeNumbers,
) -> list[tuple[DegenerationSpec, BoundaryReport]]:
    """Every admissible degeneration shape with its boundary verdict."""
    out = []
    n = h.weight
    for p0 in range(0, n + 1):
        spec = DegenerationSpec(kind="I", p0=p0)
        try:
            validate_spec(h, spec)
        except InfeasibleDegeneration:
            continue
        out.append((spec, check_boundary_concavity(h, spec)))
    spec = DegenerationSpec(kind="II")
    try:
        validate_spec(h, spec)
    except InfeasibleDegeneration:
        pass
    else:
        out.append((spec, check_boundary_concavity(h, spec)))
    return out


def _sl2_model(kind: str):
    """Standard triple in the representation matching the degeneration kind.

    Type I uses the two-dimensional representation (the highest vector has
    Y-eigenvalue 1), type II the three-dimensional one (eigenvalue 2).
    """
    if kind == "I":
        nminus = np.array([[0, 0], [1, 0]], dtype=complex)
        nplus = np.array([[0, 1], [0, 0]], dtype=complex)
        y = np.diag([1.0, -1.0]).astype(complex)
    elif kind == "II":
        nminus = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]], dtype=complex)
        nplus = np.array([[0, 2, 0], [0, 0, 2], [0, 0, 0]], dtype=complex)
        y = np.diag([2.0, 0.0, -2.0]).astype(complex)
    else:
        raise ValueError("kind must be 'I' or 'II'")
    return nplus, y, nminus


def sl2_cayley_checks(kind: str, tolerance: float = TOL_SL2) -> list[NumericCheck]:
    """All closed-form identities for d = exp(i pi/4 (N+ + N)), one check each."""
    nplus, y, nmat = _sl2_model(kind)
    d = expm(1j * (math.pi / 4) * (nplus + nmat))
    d_inv = expm(-1j * (math.pi / 4) * (nplus + nmat))
    dim = d.shape[0]
    v = np.zeros(dim, dtype=complex)
    v[0] = 1.0
    nv = nmat @ v
    checks = []

    def vec_check(claim, got, want):
        checks.append(
            make_check(
                claim=f"sl2-cayley-{kind} {claim}",
                residual=np.linalg.norm(got - want),
                tolerance=tolerance,
            )
        )

    if kind == "I":
        vec_check("d(v)", d @ v, (v + 1j * nv) / math.sqrt(2))
        vec_check("d(Nv)", d @ nv, (1j / math.sqrt(2)) * (v - 1j * nv))
        vec_check("d(conj v)", d @ np.conj(v), 1j * np.conj(d @ nv))
        vec_check("d(N conj v)", d @ nmat @ np.conj(v), 1j * np.conj(d @ v))
        eigen_pairs = [(v, 1.0), (nv, -1.0)]
    else:
        n2v = nmat @ nv
        vec_check("d(v)", d @ v, 0.5 * v + 0.5j * nv - 0.25 * n2v)
        vec_check("d(Nv)", d @ nv, 1j * (v + 0.5 * n2v))
        vec_check("d(N^2 v)", d @ n2v, -2.0 * np.conj(d @ v))
        eigen_pairs = [(v, 2.0), (nv, 0.0), (n2v, -2.0)]

    # conjugated triple closed forms
    def mat_check(claim, got, want):
        checks.append(
            make_check(
                claim=f"sl2-cayley-{kind} {claim}",
                residual=np.linalg.norm(got - want),
                tolerance=tolerance,
            )
        )

    mat_check("Ad(d) Y", d @ y @ d_inv, 1j * (nmat - nplus))
    mat_check("Ad(d) N", d @ nmat @ d_inv, 0.5 * (nmat + nplus + 1j * y))
    mat_check("Ad(d) N+", d @ nplus @ d_inv, 0.5 * (nmat + nplus - 1j * y))

    z = d @ y @ d_inv
    for vec, scalar in eigen_pairs:
        w = d @ vec
        vec_check(f"grading eigenvalue {scalar:+.0f}", z @ w, scalar * w)
    return checks


def verify_sl2_cayley_forms(kind: str, tolerance: float = TOL_SL2) -> NumericCheck:
    """Aggregate of sl2_cayley_checks; the residual is the worst identity."""
    checks = sl2_cayley_checks(kind, tolerance)
    worst = max(c.residual for c in checks)
    return make_check(
        claim=f"sl2-cayley-{kind}",
        residual=worst,
        tolerance=tolerance,
        info={"identities": len(checks)},
    )


def period_report(
    h: HodgeNumbers, only: DegenerationSpec | None = None
) -> dict:
    """JSON-ready summary: group, grading eigenvalues, degeneration verdicts."""
    group = group_of_period_domain(h)
    eigs = [
        {"p": p, "eigenvalue": str(val), "multiplicity": h.hp(p)}
        for p, val in sorted(grading_values_on_V(h).items(), reverse=True)
        if h.hp(p)
    ]
    if only is not None:
        validate_spec(h, only)
        pairs = [(only, check_boundary_concavity(h, only))]
    else:
        pairs = enumerate_minimal_degenerations(h)
    degenerations = []
    for spec, verdict in pairs:
        dia = limit_diamond(h, spec)
        degenerations.append(
            {
                "spec": spec.to_json_dict(),
                "diamond": dia.to_json_dict(),
                "boundary": verdict.to_json_dict(),
            }
        )
    return {
        "weight": h.weight,
        "hodge_numbers": [h.hp(p) for p in range(h.weight, -1, -1)],
        "group": group.to_json_dict(),
        "grading_values": eigs,
        "degenerations": degenerations,
    }


def to_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)
