"""Structure constants: sign normalization, magnitudes, Jacobi, string brackets."""

import pytest

from conftest import CLASSICAL

from flagdomains.chevalley import (
    jacobi_violations,
    structure_constants,
    verify_bracket_identities,
)
from flagdomains.rootsys import LieType, build_root_system, root, root_string

RANK_LE_4 = CLASSICAL + [("A", 4), ("B", 4), ("C", 4), ("D", 3)]


def test_a1_table_empty():
    cc = structure_constants(build_root_system(LieType("A", 1)))
    assert cc.table == {}


def test_magnitude_examples(a2, c2):
    cc = structure_constants(a2)
    s1, s2 = a2.simple_roots()
    assert abs(cc.constant(s1, s2)) == 1
    cc2 = structure_constants(c2)
    t1, t2 = c2.simple_roots()
    assert abs(cc2.constant(t1, t1 + t2)) == 2


def test_constant_zero_when_sum_not_root(a2):
    cc = structure_constants(a2)
    s1, s2 = a2.simple_roots()
    assert cc.constant(s1 + s2, s2) == 0


def test_constant_rejects_cartan_direction(a2):
    cc = structure_constants(a2)
    s1, _ = a2.simple_roots()
    with pytest.raises(ValueError):
        cc.constant(s1, -s1)


@pytest.mark.parametrize("family,rank", RANK_LE_4)
def test_sign_normalization_and_magnitude(family, rank):
    rs = build_root_system(LieType(family, rank))
    cc = structure_constants(rs)
    for a in rs.sorted_roots():
        for b in rs.sorted_roots():
            s = a + b
            if s.is_zero or s not in rs.roots:
                continue
            c = cc.constant(a, b)
            assert c != 0
            assert c == -cc.constant(b, a)
            assert c == -cc.constant(-a, -b)
            assert abs(c) == root_string(rs, b, a).r + 1
            assert abs(c) == root_string(rs, a, b).r + 1


@pytest.mark.parametrize("family,rank", CLASSICAL + [("D", 3)])
def test_jacobi_scan(family, rank):
    cc = structure_constants(build_root_system(LieType(family, rank)))
    assert jacobi_violations(cc) == []


@pytest.mark.parametrize("family,rank", RANK_LE_4)
def test_string_bracket_identity(family, rank):
    cc = structure_constants(build_root_system(LieType(family, rank)))
    report = verify_bracket_identities(cc)
    assert report.violations == []
    assert report.ok


def test_string_bracket_coefficients(a2, c2):
    cc = structure_constants(a2)
    report = verify_bracket_identities(cc)
    s1, s2 = a2.simple_roots()
    by_pair = {(e.alpha, e.beta): e for e in report.entries}
    assert by_pair[(s1, s2)].coefficient == 1

    cc2 = structure_constants(c2)
    report2 = verify_bracket_identities(cc2)
    t1, t2 = c2.simple_roots()
    by_pair2 = {(e.alpha, e.beta): e for e in report2.entries}
    assert by_pair2[(-t2, t1 + t2)].coefficient == 2
    # orthogonal-string pair: neither sum nor difference is a root
    entry = by_pair2[(t2, root((2, 1)))]
    assert entry.coefficient == 0 and entry.expected == 0


def test_double_step_chain_value(c2):
    cc = structure_constants(c2)
    t1, t2 = c2.simple_roots()
    alpha, beta = -t2, t1 + t2
    assert cc.constant(beta, alpha + beta) * cc.constant(-beta, alpha + 2 * beta) == 2
    report = verify_bracket_identities(cc)
    assert report.chain_entries
    assert all(e.product == 2 for e in report.chain_entries)


def test_extraspecial_signs_are_positive(c2):
    # the minimal special pairs carry the positive sign by construction
    cc = structure_constants(c2)
    t1, t2 = c2.simple_roots()
    assert cc.constant(t2, t1) == 1
    assert cc.constant(t1, t1 + t2) == 2


def test_json_dump_golden(a2):
    cc = structure_constants(a2)
    doc = cc.to_json_dict()
    table = {(tuple(p["a"]), tuple(p["b"])): p["value"] for p in doc["pairs"]}
    assert table == {
        ((0, 1), (1, 0)): 1,
        ((1, 0), (0, 1)): -1,
        ((1, 1), (-1, 0)): 1,
        ((-1, 0), (1, 1)): -1,
        ((1, 1), (0, -1)): -1,
        ((0, -1), (1, 1)): 1,
    }
