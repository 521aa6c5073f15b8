"""The string criterion: worked examples, brute-force soundness, symmetry."""

from itertools import product

import pytest

from flagdomains.concavity import (
    VerdictKind,
    analyze_string_condition,
    check_pseudoconcavity,
)
from flagdomains.realform import classify_roots, noncompact_negative_roots
from flagdomains.rootsys import (
    LieType,
    build_root_system,
    grading,
    root,
    root_string,
)


def test_a2_satisfied(a2):
    report = check_pseudoconcavity(a2, grading((1, 1)))
    assert report.satisfied
    assert [w.coeffs for w in report.witnesses] == [(1, 1)]
    assert {a.coeffs for a in report.noncompact_negatives} == {(-1, 0), (0, -1)}
    for v in report.detail[root((1, 1))]:
        assert v.verdict is VerdictKind.TYPE_A


def test_so5_labeling_satisfied(so5_labeled):
    report = check_pseudoconcavity(so5_labeled, grading((1, 0)))
    assert report.satisfied
    assert [w.coeffs for w in report.witnesses] == [(2, 1)]
    assert {a.coeffs for a in report.noncompact_negatives} == {(-1, 0), (-1, -1)}


def test_c2_not_satisfied(c2):
    report = check_pseudoconcavity(c2, grading((1, 1)))
    assert not report.satisfied
    assert report.witnesses == ()
    beta = root((1, 1))
    verdicts = {v.alpha: v for v in report.detail[beta]}
    v_sigma2 = verdicts[root((0, -1))]
    assert v_sigma2.verdict is VerdictKind.TYPE_B
    assert v_sigma2.endpoint == root((2, 1))
    # alpha = -s1 fails for every compact beta
    for b, vs in report.detail.items():
        for v in vs:
            if v.alpha == root((-1, 0)):
                assert v.verdict is VerdictKind.FAIL


def test_analyze_string_condition_examples(a2, c2):
    v = analyze_string_condition(a2, grading((1, 1)), root((1, 1)), root((-1, 0)))
    assert v.verdict is VerdictKind.TYPE_A
    assert v.endpoint == root((0, 1))
    assert v.endpoint_in_p

    v = analyze_string_condition(c2, grading((1, 1)), root((1, 1)), root((0, -1)))
    assert v.verdict is VerdictKind.TYPE_B
    assert v.endpoint == root((2, 1))

    v = analyze_string_condition(c2, grading((1, 1)), root((1, 1)), root((-1, 0)))
    assert v.verdict is VerdictKind.FAIL
    assert (v.r, v.q) == (1, 1)


def test_analyze_string_condition_preconditions(a2):
    e = grading((1, 1))
    with pytest.raises(ValueError):
        # beta noncompact
        analyze_string_condition(a2, e, root((1, 0)), root((0, -1)))
    with pytest.raises(ValueError):
        # alpha compact
        analyze_string_condition(a2, e, root((1, 1)), root((-1, -1)))
    with pytest.raises(ValueError):
        # alpha not negatively graded
        analyze_string_condition(a2, e, root((1, 1)), root((1, 0)))


def test_check_rejects_bad_gradings(a2):
    with pytest.raises(ValueError):
        check_pseudoconcavity(a2, grading((0, 0)))
    with pytest.raises(ValueError):
        check_pseudoconcavity(a2, grading((1, -1)))


def brute_force_verdict(rs, e):
    """Independent scan using only strings, membership and parity."""
    compact = [a for a in rs.roots if e.value(a) % 2 == 0]
    alphas = [a for a in rs.roots if e.value(a) % 2 != 0 and e.value(a) < 0]
    winners = []
    for beta in compact:
        good = True
        for alpha in alphas:
            st = root_string(rs, alpha, beta)
            if (st.r, st.q) == (0, 1):
                ok = e.value(alpha + beta) >= 0
            elif (st.r, st.q) == (0, 2):
                ok = e.value(alpha + 2 * beta) >= 0
            else:
                ok = False
            if not ok:
                good = False
                break
        if good:
            winners.append(beta)
    return bool(winners), set(winners)


RANK_LE_3 = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3)]


@pytest.mark.parametrize("family,rank", RANK_LE_3)
def test_agreement_with_brute_force(family, rank):
    rs = build_root_system(LieType(family, rank))
    for bits in product((0, 1), repeat=rs.rank):
        if not any(bits):
            continue
        e = grading(bits)
        report = check_pseudoconcavity(rs, e)
        sat, winners = brute_force_verdict(rs, e)
        assert report.satisfied == sat
        assert set(report.witnesses) == winners


def permuted_grading(bits, perm):
    out = [0] * len(bits)
    for i, j in enumerate(perm):
        out[j] = bits[i]
    return grading(out)


def test_diagram_automorphism_invariance_a3():
    rs = build_root_system(LieType("A", 3))
    reversal = (2, 1, 0)
    for bits in product((0, 1), repeat=3):
        if not any(bits):
            continue
        left = check_pseudoconcavity(rs, grading(bits)).satisfied
        right = check_pseudoconcavity(rs, permuted_grading(bits, reversal)).satisfied
        assert left == right


def test_diagram_automorphism_invariance_d4():
    rs = build_root_system(LieType("D", 4))
    # node 2 is the center; nodes 1, 3, 4 may be permuted arbitrarily
    automorphisms = [
        (0, 1, 2, 3),
        (2, 1, 0, 3),
        (3, 1, 2, 0),
        (0, 1, 3, 2),
        (2, 1, 3, 0),
        (3, 1, 0, 2),
    ]
    for bits in product((0, 1), repeat=4):
        if not any(bits):
            continue
        values = {
            check_pseudoconcavity(rs, permuted_grading(bits, perm)).satisfied
            for perm in automorphisms
        }
        assert len(values) == 1


def test_satisfied_iff_witnesses(systems):
    for rs in systems.values():
        e = grading((1,) * rs.rank)
        report = check_pseudoconcavity(rs, e)
        assert report.satisfied == bool(report.witnesses)


def test_detail_covers_all_compact_roots(c2):
    e = grading((1, 1))
    report = check_pseudoconcavity(c2, e)
    assert set(report.detail) == set(classify_roots(c2, e).compact)
    n_alphas = len(noncompact_negative_roots(c2, e))
    for verdicts in report.detail.values():
        assert len(verdicts) == n_alphas
