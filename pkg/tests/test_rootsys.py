"""Root enumeration, strings, gradings and parabolic data."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CLASSICAL
from lie_oracles import euclid_cartan_integer, euclid_roots, to_euclid

from flagdomains.rootsys import (
    LieType,
    build_root_system,
    cartan_integer,
    from_cartan_matrix,
    graded_pieces,
    grading,
    parabolic_data,
    root,
    root_string,
)

EXPECTED_COUNTS = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
}


@pytest.mark.parametrize("family,rank", CLASSICAL + [("A", 4), ("B", 4), ("C", 4), ("D", 3)])
def test_root_counts_and_closure(family, rank):
    rs = build_root_system(LieType(family, rank))
    assert len(rs.roots) == EXPECTED_COUNTS[family](rank)
    assert all(-a in rs.roots for a in rs.roots)
    positives = {a for a in rs.roots if a.is_positive}
    assert positives == rs.positive_roots
    assert 2 * len(positives) == len(rs.roots)


@pytest.mark.parametrize("family,rank", CLASSICAL)
def test_roots_match_euclidean_oracle(family, rank):
    rs = build_root_system(LieType(family, rank))
    enumerated = {to_euclid(family, rank, a.coeffs) for a in rs.roots}
    assert enumerated == euclid_roots(family, rank)


@pytest.mark.parametrize("family,rank", CLASSICAL)
def test_cartan_integers_match_euclidean_oracle(family, rank):
    rs = build_root_system(LieType(family, rank))
    roots = rs.sorted_roots()
    for a in roots:
        for b in roots:
            got = cartan_integer(rs, a, b)
            want = euclid_cartan_integer(
                to_euclid(family, rank, a.coeffs), to_euclid(family, rank, b.coeffs)
            )
            assert got == want


def test_a2_has_expected_roots(a2):
    assert {a.coeffs for a in a2.roots} == {
        (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)
    }


def test_c2_has_long_root(c2):
    assert root((2, 1)) in c2.roots
    assert root((1, 2)) not in c2.roots


def test_a1_roots():
    rs = build_root_system(LieType("A", 1))
    assert {a.coeffs for a in rs.roots} == {(1,), (-1,)}


def test_cartan_integer_examples(a2, c2):
    s1, s2 = a2.simple_roots()
    assert cartan_integer(a2, s1, s2) == -1
    t1, t2 = c2.simple_roots()
    assert {cartan_integer(c2, t1, t2), cartan_integer(c2, t2, t1)} == {-1, -2}
    for a in a2.sorted_roots():
        assert cartan_integer(a2, a, a) == 2


def test_cartan_integer_rejects_nonroot(a2):
    with pytest.raises(ValueError):
        cartan_integer(a2, root((2, 0)), root((1, 0)))


def test_root_string_examples(a2, c2):
    s1, s2 = a2.simple_roots()
    st = root_string(a2, -s1, s1 + s2)
    assert (st.r, st.q) == (0, 1)
    assert [m.coeffs for m in st.members] == [(-1, 0), (0, 1)]

    t1, t2 = c2.simple_roots()
    st = root_string(c2, -t2, t1 + t2)
    assert (st.r, st.q) == (0, 2)
    assert [m.coeffs for m in st.members] == [(0, -1), (1, 0), (2, 1)]

    st = root_string(c2, -t1, t1 + t2)
    assert (st.r, st.q) == (1, 1)
    assert [m.coeffs for m in st.members] == [(-2, -1), (-1, 0), (0, 1)]


def test_root_string_rejects_proportional(a2):
    s1, _ = a2.simple_roots()
    with pytest.raises(ValueError):
        root_string(a2, s1, s1)
    with pytest.raises(ValueError):
        root_string(a2, s1, -s1)


@pytest.mark.parametrize("family,rank", CLASSICAL)
def test_string_extents_equal_cartan_integer(family, rank):
    rs = build_root_system(LieType(family, rank))
    for a in rs.sorted_roots():
        for b in rs.sorted_roots():
            if a == b or a == -b:
                continue
            st = root_string(rs, a, b)
            assert st.r - st.q == cartan_integer(rs, a, b)
            mirrored = root_string(rs, -a, b)
            assert (mirrored.r, mirrored.q) == (st.q, st.r)


def test_graded_pieces_a1():
    rs = build_root_system(LieType("A", 1))
    pieces = graded_pieces(rs, grading((1,)))
    assert {k: {a.coeffs for a in v} for k, v in pieces.items()} == {
        1: {(1,)},
        -1: {(-1,)},
    }


def test_graded_pieces_a2(a2):
    pieces = graded_pieces(a2, grading((1, 1)))
    assert {a.coeffs for a in pieces[2]} == {(1, 1)}
    assert {a.coeffs for a in pieces[1]} == {(1, 0), (0, 1)}
    assert {a.coeffs for a in pieces[-1]} == {(-1, 0), (0, -1)}
    assert {a.coeffs for a in pieces[-2]} == {(-1, -1)}


def test_graded_pieces_so5_labeling(so5_labeled):
    pieces = graded_pieces(so5_labeled, grading((1, 0)))
    negatives = set()
    for k, v in pieces.items():
        if k < 0:
            negatives |= {a.coeffs for a in v}
    assert negatives == {(-1, 0), (-1, -1), (-2, -1)}


grading_vectors = st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=4)


@given(
    key=st.sampled_from(CLASSICAL),
    raw=st.lists(st.integers(min_value=-2, max_value=2), min_size=4, max_size=4),
)
@settings(max_examples=60, deadline=None)
def test_graded_pieces_properties(key, raw):
    rs = build_root_system(LieType(*key))
    e = grading(raw[: rs.rank])
    pieces = graded_pieces(rs, e)
    assert sum(len(v) for v in pieces.values()) == len(rs.roots)
    for k, v in pieces.items():
        assert len(pieces.get(-k, frozenset())) == len(v)
        for a in v:
            assert e.value(a) == k
    # the bracket grading at root level
    for a in rs.roots:
        for b in rs.roots:
            s = a + b
            if s in rs.roots:
                assert e.value(s) == e.value(a) + e.value(b)


def test_parabolic_data_examples(a2, so5_labeled):
    rs1 = build_root_system(LieType("A", 1))
    pd = parabolic_data(rs1, grading((1,)))
    assert {a.coeffs for a in pd.parabolic_roots} == {(1,)}
    assert pd.crossed_nodes == (1,)
    assert pd.dim_domain == 1

    assert parabolic_data(a2, grading((1, 1))).dim_domain == 3
    assert parabolic_data(so5_labeled, grading((1, 0))).dim_domain == 3


def test_invalid_types():
    with pytest.raises(ValueError):
        LieType("E", 6)
    with pytest.raises(ValueError):
        LieType("D", 2)
    with pytest.raises(ValueError):
        LieType("B", 1)


def test_invalid_cartan_matrices():
    with pytest.raises(ValueError):
        from_cartan_matrix([[2, -1], [0, 2]])
    with pytest.raises(ValueError):
        from_cartan_matrix([[1, 0], [0, 2]])
    with pytest.raises(ValueError):
        from_cartan_matrix([[2, 1], [1, 2]])
    with pytest.raises(ValueError):
        # affine A1 tilde, not finite type
        from_cartan_matrix([[2, -2], [-2, 2]])


def test_override_matches_family(c2, so5_labeled):
    assert so5_labeled == c2
    assert so5_labeled.lie_type == LieType("C", 2)
    bourbaki_b2 = from_cartan_matrix([[2, -2], [-1, 2]])
    assert bourbaki_b2.lie_type == LieType("B", 2)
    assert {a.coeffs for a in bourbaki_b2.positive_roots} == {
        (1, 0), (0, 1), (1, 1), (1, 2)
    }


def test_json_round_trip(systems):
    for rs in systems.values():
        doc = json.loads(rs.to_json())
        rebuilt = from_cartan_matrix(doc["cartan"])
        assert rebuilt == rs
        assert rebuilt.to_json() == rs.to_json()
        assert all(isinstance(v, int) for row in doc["cartan"] for v in row)
        assert all(isinstance(v, int) for rt in doc["roots"] for v in rt)


def test_detected_family_appears_in_json(so5_labeled):
    assert json.loads(so5_labeled.to_json())["family"] == "C"
