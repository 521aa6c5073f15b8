"""Finite-difference Levi form analysis."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagdomains.leviform import DefiningFunction, levi_analyze


def sphere(n, sign=1.0, radius=1.0):
    return DefiningFunction.from_callable(
        n,
        lambda z: sign * (float(np.sum(np.abs(z) ** 2).real) - radius),
        [radius] + [0.0] * (n - 1),
    )


def test_ball_boundary_not_pseudoconcave():
    report = levi_analyze(sphere(3))
    assert len(report.eigenvalues) == 2
    assert report.negatives == 0
    assert not report.pseudoconcave_point
    assert np.allclose(report.eigenvalues, [1.0, 1.0], atol=1e-6)


def test_ball_complement_pseudoconcave():
    report = levi_analyze(sphere(3, sign=-1.0))
    assert report.negatives == 2
    assert report.pseudoconcave_point
    assert np.allclose(report.eigenvalues, [-1.0, -1.0], atol=1e-6)


def test_normal_form_mixed_signature():
    lam2, lam3 = -2.5, 0.75

    def phi(z):
        return float(2 * z[0].real + lam2 * abs(z[1]) ** 2 + lam3 * abs(z[2]) ** 2)

    report = levi_analyze(DefiningFunction.from_callable(3, phi, [0, 0, 0]))
    assert report.negatives == 1
    assert report.pseudoconcave_point
    assert np.allclose(report.eigenvalues, [lam2, lam3], atol=1e-6)


def test_vanishing_gradient_rejected():
    f = DefiningFunction.from_callable(
        2, lambda z: float(np.sum(np.abs(z) ** 2).real), [0, 0]
    )
    with pytest.raises(ValueError):
        levi_analyze(f)


def test_quadratic_hessian_accuracy():
    rng = np.random.default_rng(7)
    n = 3
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    herm = 0.5 * (a + a.conj().T)

    def phi(z):
        w = np.asarray(z)
        return float((2 * w[0].real) + (w.conj() @ herm @ w).real)

    report = levi_analyze(DefiningFunction.from_callable(n, phi, [0] * n))
    # restrict exactly: the plane is w[0] = 0
    exact = np.linalg.eigvalsh(herm[1:, 1:])
    assert np.allclose(sorted(report.eigenvalues), sorted(exact), atol=1e-6)


@given(scale=st.floats(min_value=0.1, max_value=10.0))
@settings(max_examples=20, deadline=None)
def test_signature_invariant_under_positive_scaling(scale):
    lam2, lam3 = -1.5, 2.0

    def phi(z):
        return float(
            scale * (2 * z[0].real + lam2 * abs(z[1]) ** 2 + lam3 * abs(z[2]) ** 2)
        )

    report = levi_analyze(DefiningFunction.from_callable(3, phi, [0, 0, 0]))
    assert report.negatives == 1
    assert sum(1 for v in report.eigenvalues if v > 0) == 1


def test_signature_invariant_under_unitary_change():
    lam = np.array([-1.0, 0.5, 2.0])
    rng = np.random.default_rng(11)

    def base(z):
        w = np.asarray(z)
        return float(2 * w[0].real + np.sum(lam * np.abs(w) ** 2))

    base_report = levi_analyze(DefiningFunction.from_callable(3, base, [0, 0, 0]))
    for _ in range(5):
        raw = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        u, _ = np.linalg.qr(raw)

        def rotated(z, u=u):
            return base(u @ np.asarray(z))

        report = levi_analyze(DefiningFunction.from_callable(3, rotated, [0, 0, 0]))
        assert report.negatives + sum(1 for v in report.eigenvalues if v > 0) == 2
        # full signature on the respective tangent planes can differ only by
        # the plane; the count of negative directions of the ambient form is
        # preserved, and for these diagonal models the restricted counts agree
        assert report.negatives == base_report.negatives


def test_polynomial_mode_matches_callback():
    terms = [
        {"c": 1, "z": [1, 0, 0], "zbar": [1, 0, 0]},
        {"c": 1, "z": [0, 1, 0], "zbar": [0, 1, 0]},
        {"c": 1, "z": [0, 0, 1], "zbar": [0, 0, 1]},
        {"c": -1},
    ]
    f = DefiningFunction.from_polynomial(3, [1, 0, 0], terms)
    report = levi_analyze(f)
    direct = levi_analyze(sphere(3))
    assert np.allclose(report.eigenvalues, direct.eigenvalues, atol=1e-9)
    assert report.negatives == direct.negatives


def test_polynomial_validation():
    with pytest.raises(ValueError):
        DefiningFunction.from_polynomial(2, [0, 0], [{"c": 1, "z": [1], "zbar": [0, 0]}])
