"""Compact versus noncompact roots, read off from grading parity.

For a flag domain whose isotropy group is compact and centralizes a
circle, the Weil element induces the Cartan involution, so a root space
lands in the complexified maximal compact subalgebra exactly when its
grading value is even.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import GradingElement, Root, RootSystem, check_grading


@dataclass(frozen=True)
class CompactnessTable:
    compact: frozenset[Root]
    noncompact: frozenset[Root]


def classify_roots(rs: RootSystem, e: GradingElement) -> CompactnessTable:
    """Partition the roots into compact (even grading) and noncompact (odd)."""
    check_grading(rs, e)
    compact = frozenset(a for a in rs.roots if e.value(a) % 2 == 0)
    return CompactnessTable(compact=compact, noncompact=frozenset(rs.roots - compact))


def noncompact_negative_roots(rs: RootSystem, e: GradingElement) -> frozenset[Root]:
    """Noncompact roots with strictly negative grading value."""
    check_grading(rs, e)
    return frozenset(
        a for a in rs.roots if e.value(a) < 0 and e.value(a) % 2 != 0
    )
