"""Exact enumeration of classical root systems and root-string combinatorics.

Roots are integer coefficient vectors over a fixed set of simple roots.
The inner product comes from the symmetrized Cartan matrix, normalized so
long roots have squared length 2, and every operation runs in exact
rational arithmetic. Root systems are built either from a family label
(A, B, C, D) or from an explicit Cartan matrix, which makes both
orientations of the rank-two B/C labelings available.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

_ROOT_COUNT = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
}

# Enumeration guard; classical heights stay well below this for rank <= 6.
_MAX_HEIGHT = 64


@dataclass(frozen=True)
class LieType:
    """A classical family label together with a rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(
                f"unknown family {self.family!r}; expected one of {FAMILIES}"
            )
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"family {self.family} needs rank >= {_MIN_RANK[self.family]}, "
                f"got {self.rank}"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True, order=True)
class Root:
    """Integer coefficient vector in the simple-root basis.

    Arithmetic is plain lattice arithmetic; whether a vector is an actual
    root of a given system is checked against that system on use.
    """

    coeffs: tuple[int, ...]

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "Root":
        return Root(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return any(self.coeffs) and min(self.coeffs) >= 0

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def root(seq) -> Root:
    """Coerce an iterable of integers to a Root."""
    return Root(tuple(int(c) for c in seq))


@dataclass(frozen=True)
class GradingElement:
    """Integer coefficients over the basis dual to the simple roots.

    The value on a root is the coefficient dot product; it is the
    eigenvalue of that root space in the induced graded decomposition.
    """

    coeffs: tuple[int, ...]

    def value(self, a: Root) -> int:
        return sum(n * c for n, c in zip(self.coeffs, a.coeffs, strict=True))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return "E(" + ",".join(str(c) for c in self.coeffs) + ")"


def grading(seq) -> GradingElement:
    """Coerce an iterable of integers to a GradingElement."""
    return GradingElement(tuple(int(c) for c in seq))


@dataclass(frozen=True)
class RootString:
    """The unbroken progression a + n*b inside the root set, -r <= n <= q."""

    r: int
    q: int
    members: tuple[Root, ...]


@dataclass(frozen=True)
class RootSystem:
    """A finite root system with exact inner-product data.

    ``lengths`` holds the squared length of each simple root; long roots
    are normalized to squared length 2 within each irreducible component.
    """

    lie_type: LieType | None
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[Fraction, ...]
    roots: frozenset[Root]
    positive_roots: frozenset[Root]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def contains(self, a: Root) -> bool:
        return a in self.roots

    def check_member(self, a: Root) -> None:
        if a not in self.roots:
            raise ValueError(f"{a} is not a root of this system")

    def simple_roots(self) -> tuple[Root, ...]:
        r = self.rank
        return tuple(
            Root(tuple(1 if j == i else 0 for j in range(r))) for i in range(r)
        )

    def inner(self, a: Root, b: Root) -> Fraction:
        """Symmetrized bilinear form (a, b), exact."""
        total = Fraction(0)
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(b.coeffs):
                if not bj:
                    continue
                total += Fraction(ai * bj * self.cartan[i][j]) * self.lengths[j] / 2
        return total

    def length2(self, a: Root) -> Fraction:
        return self.inner(a, a)

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots, key=lambda a: (a.height, a.coeffs))

    def sorted_positive(self) -> list[Root]:
        return sorted(self.positive_roots, key=lambda a: (a.height, a.coeffs))

    def to_json_dict(self) -> dict:
        return {
            "family": self.lie_type.family if self.lie_type else None,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "roots": [list(a.coeffs) for a in sorted(self.roots, key=lambda a: a.coeffs)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def check_grading(rs: RootSystem, e: GradingElement) -> None:
    if len(e.coeffs) != rs.rank:
        raise ValueError(
            f"grading element has {len(e.coeffs)} coefficients, system has rank {rs.rank}"
        )


def standard_cartan(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries <s_i, s_j> = 2(s_i,s_j)/(s_j,s_j).

    B has a short last simple root, C a long one, D forks at the end.
    """
    r = t.rank
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        m[i][i] = 2
    for i in range(r - 1):
        m[i][i + 1] = -1
        m[i + 1][i] = -1
    if t.family == "B":
        m[r - 2][r - 1] = -2
    elif t.family == "C":
        m[r - 1][r - 2] = -2
    elif t.family == "D":
        m[r - 1][r - 2] = m[r - 2][r - 1] = 0
        m[r - 1][r - 3] = m[r - 3][r - 1] = -1
    return tuple(tuple(row) for row in m)


def build_root_system(t: LieType) -> RootSystem:
    """Enumerate the root system of a classical family."""
    rs = from_cartan_matrix(standard_cartan(t))
    if rs.lie_type != t and t not in (None,):
        # D3 shares its matrix with no other family, A1 with B1/C1 excluded;
        # detection is exact, so a mismatch means a bug.
        raise AssertionError("family detection disagrees with the requested type")
    return rs


def from_cartan_matrix(cartan) -> RootSystem:
    """Enumerate a root system from an explicit Cartan matrix.

    The matrix must be a valid finite-type Cartan matrix: 2 on the
    diagonal, nonpositive integers off it, zeros placed symmetrically,
    and symmetrizable. The family label is recovered when the matrix
    equals a standard one.
    """
    normalized = tuple(tuple(int(x) for x in row) for row in cartan)
    return _build_cached(normalized)


@lru_cache(maxsize=None)
def _build_cached(cartan: tuple[tuple[int, ...], ...]) -> RootSystem:
    _validate_cartan(cartan)
    lengths = _symmetrizer(cartan)
    positives = _positive_roots(cartan)
    roots = frozenset(positives) | frozenset(-a for a in positives)
    lie_type = _detect_family(cartan)
    rs = RootSystem(
        lie_type=lie_type,
        cartan=cartan,
        lengths=lengths,
        roots=roots,
        positive_roots=frozenset(positives),
    )
    if lie_type is not None:
        expected = _ROOT_COUNT[lie_type.family](lie_type.rank)
        if len(roots) != expected:
            raise AssertionError(
                f"{lie_type}: enumerated {len(roots)} roots, expected {expected}"
            )
    return rs


def _validate_cartan(cartan: tuple[tuple[int, ...], ...]) -> None:
    r = len(cartan)
    if r == 0 or any(len(row) != r for row in cartan):
        raise ValueError("Cartan matrix must be square and nonempty")
    for i in range(r):
        if cartan[i][i] != 2:
            raise ValueError("Cartan matrix needs 2 on the diagonal")
        for j in range(r):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise ValueError("off-diagonal Cartan entries must be <= 0")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise ValueError("zero pattern of a Cartan matrix must be symmetric")


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[Fraction, ...]:
    """Squared lengths of the simple roots, long roots scaled to 2.

    Propagates length ratios along the Dynkin graph and normalizes per
    connected component. Raises when the matrix is not symmetrizable.
    """
    r = len(cartan)
    lengths: list[Fraction | None] = [None] * r
    for start in range(r):
        if lengths[start] is not None:
            continue
        component = [start]
        lengths[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(r):
                if j == i or cartan[i][j] == 0:
                    continue
                # from C[i][j] len_j = C[j][i] len_i
                ratio = Fraction(cartan[j][i], cartan[i][j])
                if lengths[j] is None:
                    lengths[j] = lengths[i] * ratio
                    component.append(j)
                    queue.append(j)
        top = max(lengths[i] for i in component)
        for i in component:
            lengths[i] = lengths[i] * 2 / top
    assert all(v is not None for v in lengths)
    for i in range(r):
        for j in range(r):
            if cartan[i][j] * lengths[j] != cartan[j][i] * lengths[i]:
                raise ValueError("Cartan matrix is not symmetrizable")
    return tuple(lengths)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[Root]:
    """Level-by-level closure of the simple roots under string extension."""
    r = len(cartan)
    simples = [Root(tuple(1 if j == i else 0 for j in range(r))) for i in range(r)]
    known: set[Root] = set(simples)
    current: set[Root] = set(simples)
    height = 1
    while current:
        nxt: set[Root] = set()
        for a in current:
            for i, s in enumerate(simples):
                pairing = sum(c * cartan[j][i] for j, c in enumerate(a.coeffs))
                down = 0
                probe = a - s
                while probe in known:
                    down += 1
                    probe = probe - s
                if down - pairing >= 1:
                    cand = a + s
                    if cand not in known:
                        nxt.add(cand)
        known |= nxt
        current = nxt
        height += 1
        if height > _MAX_HEIGHT:
            raise ValueError("matrix does not define a finite root system")
    return sorted(known, key=lambda a: (a.height, a.coeffs))


def _detect_family(cartan: tuple[tuple[int, ...], ...]) -> LieType | None:
    r = len(cartan)
    for fam in FAMILIES:
        if r < _MIN_RANK[fam]:
            continue
        t = LieType(fam, r)
        if standard_cartan(t) == cartan:
            return t
    return None


def cartan_integer(rs: RootSystem, a: Root, b: Root) -> int:
    """The pairing 2(a, b)/(b, b); an integer for roots of the system."""
    rs.check_member(a)
    rs.check_member(b)
    v = 2 * rs.inner(a, b) / rs.length2(b)
    if v.denominator != 1:
        raise ArithmeticError(f"pairing <{a},{b}> is not integral")
    return int(v)


def root_string(rs: RootSystem, a: Root, b: Root) -> RootString:
    """The b-string through a, with down and up extents (r, q)."""
    rs.check_member(a)
    rs.check_member(b)
    if a == b or a == -b:
        raise ValueError("the string through a in direction b needs a != +-b")
    q = 0
    while (a + (q + 1) * b) in rs.roots:
        q += 1
    r = 0
    while (a - (r + 1) * b) in rs.roots:
        r += 1
    members = tuple(a + n * b for n in range(-r, q + 1))
    return RootString(r=r, q=q, members=members)


def graded_pieces(rs: RootSystem, e: GradingElement) -> dict[int, frozenset[Root]]:
    """Partition of the roots by grading value; only nonempty pieces appear."""
    check_grading(rs, e)
    out: dict[int, set[Root]] = {}
    for a in rs.sorted_roots():
        out.setdefault(e.value(a), set()).add(a)
    return {k: frozenset(v) for k, v in sorted(out.items())}


@dataclass(frozen=True)
class ParabolicData:
    """The parabolic cut out by a grading element.

    ``crossed_nodes`` are the 1-based simple-root indices i with n_i > 0,
    exactly the nodes whose negative simple root spaces fall outside the
    parabolic. ``dim_domain`` is the number of negatively graded roots,
    the complex dimension of the corresponding flag variety.
    """

    parabolic_roots: frozenset[Root]
    crossed_nodes: tuple[int, ...]
    dim_domain: int


def parabolic_data(rs: RootSystem, e: GradingElement) -> ParabolicData:
    check_grading(rs, e)
    nonneg = frozenset(a for a in rs.roots if e.value(a) >= 0)
    crossed = tuple(i + 1 for i, n in enumerate(e.coeffs) if n > 0)
    dim_domain = sum(1 for a in rs.roots if e.value(a) < 0)
    return ParabolicData(nonneg, crossed, dim_domain)


def coroot_coefficients(rs: RootSystem, a: Root) -> tuple[int, ...]:
    """Integer expansion of the coroot of a over the simple coroots."""
    rs.check_member(a)
    la = rs.length2(a)
    out = []
    for i, c in enumerate(a.coeffs):
        v = Fraction(c) * rs.lengths[i] / la
        if v.denominator != 1:
            raise ArithmeticError(f"coroot expansion of {a} is not integral")
        out.append(int(v))
    return tuple(out)


def grading_cartan_coefficients(
    rs: RootSystem, e: GradingElement
) -> tuple[Fraction, ...]:
    """Rational w with e = sum_k w_k H^{s_k}, solved from the Cartan matrix."""
    check_grading(rs, e)
    r = rs.rank
    # Gaussian elimination over Fractions on [C | n].
    aug = [
        [Fraction(rs.cartan[i][k]) for k in range(r)] + [Fraction(e.coeffs[i])]
        for i in range(r)
    ]
    for col in range(r):
        pivot = next(row for row in range(col, r) if aug[row][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for row in range(r):
            if row != col and aug[row][col] != 0:
                factor = aug[row][col]
                aug[row] = [v - factor * w for v, w in zip(aug[row], aug[col])]
    return tuple(aug[i][r] for i in range(r))
