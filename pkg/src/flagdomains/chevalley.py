"""Signed structure constants of a Chevalley basis.

Positive roots are ordered by height and then lexicographically. For each
non-simple positive root the minimal special pair summing to it (the
extraspecial pair) receives the positive sign; every other constant
follows from antisymmetry and the Jacobi identity. The resulting table
satisfies

    c(a, b) = -c(b, a) = -c(-a, -b),    |c(a, b)| = r + 1,

where r is the down extent of the b-string through a. Constants are
stored for pairs with a positive sum; negative sums are derived on lookup
through the sign normalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import (
    Root,
    RootSystem,
    coroot_coefficients,
    root_string,
)


@dataclass(frozen=True, eq=False)
class ChevalleyConstants:
    """Lookup table for the constants c(a, b) with [x^a, x^b] = c(a, b) x^{a+b}."""

    rs: RootSystem
    table: dict

    def constant(self, a: Root, b: Root) -> int:
        """c(a, b) for roots a, b; zero when a + b is not a root."""
        self.rs.check_member(a)
        self.rs.check_member(b)
        s = a + b
        if s.is_zero:
            raise ValueError("a + b = 0; that bracket is a Cartan element")
        if s not in self.rs.roots:
            return 0
        if s.is_positive:
            return self.table[(a, b)]
        return -self.table[(-a, -b)]

    def pairs(self):
        """All stored (a, b, value) triples in a deterministic order."""
        for (a, b) in sorted(self.table, key=lambda ab: (ab[0].coeffs, ab[1].coeffs)):
            yield a, b, self.table[(a, b)]

    def to_json_dict(self) -> dict:
        return {
            "pairs": [
                {"a": list(a.coeffs), "b": list(b.coeffs), "value": v}
                for a, b, v in self.pairs()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@lru_cache(maxsize=None)
def structure_constants(rs: RootSystem) -> ChevalleyConstants:
    """Build the constants table with the extraspecial sign convention."""
    pos = rs.sorted_positive()
    order = {a: i for i, a in enumerate(pos)}

    special: dict[tuple[Root, Root], int] = {}

    def down_extent(a: Root, b: Root) -> int:
        k = 0
        while (a - (k + 1) * b) in rs.roots:
            k += 1
        return k

    def lookup(a: Root, b: Root) -> int:
        # Valid whenever a + b is a root and every positive pair with a
        # lower height sum is already in `special`.
        if a.is_positive and b.is_positive:
            return special[(a, b)] if order[a] < order[b] else -special[(b, a)]
        na, nb = -a, -b
        if na.is_positive and nb.is_positive:
            return -lookup(na, nb)
        if not a.is_positive:
            return -lookup(b, a)
        # a > 0 > b; rewrite through the triple (a, b, c) with a+b+c = 0,
        # where c(a,b)/(c,c) = c(b,c)/(a,a) = c(c,a)/(b,b).
        s = a + b
        c = -s
        if s.is_positive:
            val = Fraction(-lookup(nb, s)) * rs.length2(c) / rs.length2(a)
        else:
            val = Fraction(lookup(c, a)) * rs.length2(c) / rs.length2(b)
        if val.denominator != 1 or val == 0:
            raise ArithmeticError(f"inconsistent structure constant for ({a}, {b})")
        return int(val)

    for g in pos:
        if g.height < 2:
            continue
        pairs = []
        for a in pos:
            if order[a] >= order[g]:
                break
            b = g - a
            if b in rs.positive_roots and order[a] < order[b]:
                pairs.append((a, b))
        if not pairs:
            raise AssertionError(f"no special pair sums to {g}")
        a1, b1 = pairs[0]
        special[(a1, b1)] = down_extent(a1, b1) + 1
        for a, b in pairs[1:]:
            t = Fraction(0)
            if (a1 - a) in rs.roots:
                t += lookup(-a, a1) * lookup(a1 - a, b1)
            if (b1 - a) in rs.roots:
                t += lookup(b1, -a) * lookup(b1 - a, a1)
            val = t * rs.length2(g) / (rs.length2(b) * special[(a1, b1)])
            if val.denominator != 1 or val == 0:
                raise ArithmeticError(f"inconsistent structure constant for ({a}, {b})")
            special[(a, b)] = int(val)

    table: dict[tuple[Root, Root], int] = {}
    for a in rs.sorted_roots():
        for b in rs.sorted_roots():
            s = a + b
            if s in rs.roots and s.is_positive:
                table[(a, b)] = lookup(a, b)
    return ChevalleyConstants(rs=rs, table=table)


@dataclass(frozen=True)
class StringBracketEntry:
    """One evaluation of [x^{-b}, [x^b, x^a]] against q(r+1) x^a."""

    alpha: Root
    beta: Root
    coefficient: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.coefficient == self.expected


@dataclass(frozen=True)
class ChainEntry:
    """The double-step product c(b, a+b) c(-b, a+2b) on a (0, 2) string."""

    alpha: Root
    beta: Root
    product: int
    expected: int = 2

    @property
    def ok(self) -> bool:
        return self.product == self.expected


@dataclass(frozen=True, eq=False)
class BracketReport:
    entries: tuple[StringBracketEntry, ...]
    chain_entries: tuple[ChainEntry, ...]

    @property
    def violations(self) -> list:
        bad: list = [e for e in self.entries if not e.ok]
        bad.extend(e for e in self.chain_entries if not e.ok)
        return bad

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_bracket_identities(cc: ChevalleyConstants) -> BracketReport:
    """Check the string identity on every linearly independent root pair.

    For each ordered pair (a, b) with a != +-b the coefficient of x^a in
    [x^{-b}, [x^b, x^a]] must equal q(r+1) for the b-string through a;
    pairs with a (0, 2) string must additionally satisfy
    c(b, a+b) c(-b, a+2b) = 2.
    """
    rs = cc.rs
    entries = []
    chains = []
    for a in rs.sorted_roots():
        for b in rs.sorted_roots():
            if a == b or a == -b:
                continue
            st = root_string(rs, a, b)
            expected = st.q * (st.r + 1)
            if (a + b) in rs.roots:
                coeff = cc.constant(b, a) * cc.constant(-b, a + b)
            else:
                coeff = 0
            entries.append(StringBracketEntry(a, b, coeff, expected))
            if (st.r, st.q) == (0, 2):
                prod = cc.constant(b, a + b) * cc.constant(-b, a + 2 * b)
                chains.append(ChainEntry(a, b, prod))
    return BracketReport(tuple(entries), tuple(chains))


# Abstract bracket algebra over the basis {x^a} union {H^{s_i}}; elements
# are dicts mapping basis symbols to Fractions.

def _add_into(acc: dict, sym, val: Fraction) -> None:
    cur = acc.get(sym, Fraction(0)) + val
    if cur:
        acc[sym] = cur
    else:
        acc.pop(sym, None)


def _basis_bracket(cc: ChevalleyConstants, s1, s2) -> dict:
    rs = cc.rs
    kind1, data1 = s1
    kind2, data2 = s2
    out: dict = {}
    if kind1 == "x" and kind2 == "x":
        a, b = data1, data2
        s = a + b
        if s.is_zero:
            for i, coef in enumerate(coroot_coefficients(rs, a)):
                if coef:
                    _add_into(out, ("h", i), Fraction(coef))
        elif s in rs.roots:
            _add_into(out, ("x", s), Fraction(cc.constant(a, b)))
        return out
    if kind1 == "h" and kind2 == "x":
        i, a = data1, data2
        pairing = sum(c * rs.cartan[j][i] for j, c in enumerate(a.coeffs))
        if pairing:
            _add_into(out, ("x", a), Fraction(pairing))
        return out
    if kind1 == "x" and kind2 == "h":
        inner = _basis_bracket(cc, s2, s1)
        return {sym: -v for sym, v in inner.items()}
    return out


def abstract_bracket(cc: ChevalleyConstants, e1: dict, e2: dict) -> dict:
    """Bilinear extension of the basis bracket to free-module elements."""
    out: dict = {}
    for s1, v1 in e1.items():
        for s2, v2 in e2.items():
            for sym, v in _basis_bracket(cc, s1, s2).items():
                _add_into(out, sym, v1 * v2 * v)
    return out


def basis_symbols(cc: ChevalleyConstants) -> list:
    syms = [("x", a) for a in cc.rs.sorted_roots()]
    syms.extend(("h", i) for i in range(cc.rs.rank))
    return syms


def jacobi_violations(cc: ChevalleyConstants) -> list:
    """Triples of basis symbols whose cyclic double brackets do not cancel."""
    syms = basis_symbols(cc)
    violations = []
    for i, s1 in enumerate(syms):
        e1 = {s1: Fraction(1)}
        for j in range(i + 1, len(syms)):
            s2 = syms[j]
            e2 = {s2: Fraction(1)}
            b12 = _basis_bracket(cc, s1, s2)
            for k in range(j + 1, len(syms)):
                s3 = syms[k]
                e3 = {s3: Fraction(1)}
                total: dict = {}
                for sym, v in abstract_bracket(cc, b12, e3).items():
                    _add_into(total, sym, v)
                for sym, v in abstract_bracket(
                    cc, _basis_bracket(cc, s2, s3), e1
                ).items():
                    _add_into(total, sym, v)
                for sym, v in abstract_bracket(
                    cc, _basis_bracket(cc, s3, s1), e2
                ).items():
                    _add_into(total, sym, v)
                if total:
                    violations.append((s1, s2, s3))
    return violations
