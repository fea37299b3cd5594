import math

import numpy as np
import pytest
import sympy as sp

from agspectra import closed_form as cf
from agspectra.closed_form import PolyFamily, eval_g3_derivative, eval_poly, largest_root
from agspectra.enumerate import enumerate_unicyclic
from agspectra.graph import build_family
from agspectra.spectral import char_poly, full_spectrum, spectral_radius
from agspectra.weights import ag_matrix

FAMILY_OF = {"g1": "g1", "g2": "g2", "g3": "g3", "t1": "star-plus-edge"}
PHI_OF = {"phi1": "g1", "phi2": "g2", "phi3": "g3", "phi-star-plus-edge": "star-plus-edge"}

rho, N = sp.symbols("rho n")
R = sp.Rational
# written out again from the published formulas, independently of closed_form.py
SYMPY_G1 = 8 * (N - 2) * rho**4 - (2 * N**3 - 10 * N**2 + 34 * N - 40) * rho**2 + 4 * (N - 4) * (N - 1) ** 2
SYMPY_G2 = (4 * (N - 2) * rho**4 - (6 * N**3 - 31 * N**2 + 115 * N - 136) / 6 * rho**2
            - (5 * N**2 + 5 * N) / 6 * rho + R(2, 3) * N**2 + R(19, 8) * (N - 4) * (N - 1) ** 2)
SYMPY_G3 = (8 * (N - 2) * rho**6 - (2 * N**3 - 11 * N**2 + 39 * N - 44) * rho**4 - 2 * N**2 * rho**3
            + (R(13, 4) * N**2 + 9 * (N - 2) + R(17, 4) * (N - 5) * (N - 1) ** 2) * rho**2
            + R(9, 4) * N**2 * rho - R(9, 4) * (N - 5) * (N - 1) ** 2)
SYMPY_T1 = rho**3 - rho**2 - (N**3 - 2 * N**2 + 2 * N + 1) / (4 * (N - 1)) * rho + (N - 3) * N**2 / (4 * (N - 1))
SYMPY_PHI = {
    "phi1": rho ** (N - 4) / (8 * (N - 2)) * SYMPY_G1,
    "phi2": rho ** (N - 4) / (4 * (N - 2)) * SYMPY_G2,
    "phi3": rho ** (N - 6) / (8 * (N - 2)) * SYMPY_G3,
    "phi-star-plus-edge": rho ** (N - 4) * (rho + 1) * SYMPY_T1,
}


def sympy_coeffs(phi, n):
    expr = sp.expand(sp.cancel(SYMPY_PHI[phi].subs(N, n)))
    return np.array([float(c) for c in sp.Poly(expr, rho).all_coeffs()])


def test_phi1_n8_matches_char_poly():
    got = char_poly(ag_matrix(build_family("g1", 8)))
    assert np.allclose(got, sympy_coeffs("phi1", 8), rtol=0, atol=1e-8)


@pytest.mark.parametrize("phi", list(PHI_OF))
@pytest.mark.parametrize("n", range(5, 21))
def test_phi_transcription_against_graph(phi, n):
    ref = np.poly(ag_matrix(build_family(PHI_OF[phi], n)))
    mine = cf.phi_coeffs(phi, n)
    assert len(mine) == n + 1
    scale = np.abs(ref).max()
    assert np.allclose(mine, ref, rtol=0, atol=1e-10 * scale)
    assert np.allclose(sympy_coeffs(phi, n), ref, rtol=0, atol=1e-10 * scale)


def test_eval_examples():
    assert eval_poly("g1", 3.0, 7) == pytest.approx(126, abs=1e-9)
    assert eval_poly("t1", 0.0, 8) == pytest.approx(80 / 7, abs=1e-12)
    r = spectral_radius(ag_matrix(build_family("g1", 8)))
    assert abs(eval_poly("phi1", r, 8)) <= 1e-6


@pytest.mark.parametrize("phi", list(PHI_OF))
@pytest.mark.parametrize("n", [5, 6, 12, 20])
def test_phi_residual_at_every_eigenvalue(phi, n):
    for lam in full_spectrum(ag_matrix(build_family(PHI_OF[phi], n))).eigenvalues:
        assert abs(eval_poly(phi, lam, n)) / (1 + abs(lam) ** n) <= 1e-6


def test_phi_domain():
    with pytest.raises(ValueError):
        eval_poly("phi1", 1.0, 4)


def test_fourth_derivative_example():
    assert eval_g3_derivative(4, (3 - 1.6) / 2, 3) == pytest.approx(739.2, abs=1e-9)


@pytest.mark.parametrize("n", [3, 8, 17, 50])
@pytest.mark.parametrize("x", [-2.0, 0.3, 5.0, 30.0])
def test_fourth_derivative_matches_printed(n, x):
    assert eval_g3_derivative(4, x, n) == pytest.approx(cf.g3_fourth_derivative_printed(x, n), rel=1e-12)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [6, 10, 25])
def test_derivatives_against_finite_differences(k, n):
    x = (n - 1.6) / 2
    h = 1e-5 * max(1.0, x)
    if k == 1:
        f = lambda t: eval_poly("g3", t, n)  # noqa: E731
    else:
        f = lambda t: eval_g3_derivative(k - 1, t, n)  # noqa: E731
    fd = (f(x + h) - f(x - h)) / (2 * h)
    assert eval_g3_derivative(k, x, n) == pytest.approx(fd, rel=1e-6)


def test_third_derivative_positive_at_4():
    assert eval_g3_derivative(3, (4 - 1.6) / 2, 4) > 0


def test_derivative_order_domain():
    with pytest.raises(ValueError):
        eval_g3_derivative(5, 1.0, 8)


def test_largest_root_examples():
    r = largest_root("t1", 8)
    assert 3.5 < r < 4
    assert largest_root("g1", 15) == pytest.approx(6.7812, abs=5e-4)
    assert largest_root("g3", 21) == pytest.approx(9.6757, abs=5e-4)


@pytest.mark.parametrize("fac", list(FAMILY_OF))
@pytest.mark.parametrize("n", range(8, 41))
def test_largest_root_matches_eigensolver(fac, n):
    radius = full_spectrum(ag_matrix(build_family(FAMILY_OF[fac], n))).radius
    assert abs(largest_root(fac, n) - radius) <= 1e-8


@pytest.mark.parametrize("fac", list(FAMILY_OF))
def test_largest_root_is_largest_numpy_root(fac):
    for n in (8, 16, 30):
        roots = np.roots(cf.factor_coeffs(fac, n))
        real = roots[np.abs(roots.imag) < 1e-9].real
        assert largest_root(fac, n) == pytest.approx(real.max(), abs=1e-9)


def test_largest_root_domain():
    with pytest.raises(ValueError):
        largest_root("phi1", 8)
    with pytest.raises(ValueError):
        largest_root("g1", 7)


def test_lemma4_examples():
    c5 = build_family("cycle", 5)
    assert cf.lemma4_bound(c5, 0) == pytest.approx(10 / (2 * math.sqrt(2)), abs=1e-12)
    assert cf.lemma4_bound(c5, 0) == pytest.approx(3.5355339, abs=1e-7)
    assert cf.row_image(c5, 2) == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    spe = build_family("star-plus-edge", 8)
    assert cf.row_image(spe, 5) == pytest.approx(4.0, abs=1e-12)


@pytest.mark.parametrize("n", range(3, 10))
def test_lemma4_on_enumerated(n):
    for g in enumerate_unicyclic(n):
        for v in range(n):
            assert cf.row_image(g, v) <= cf.lemma4_bound(g, v) + 1e-12


def test_lemma7_examples():
    assert cf.lemma7_threshold(22, 10) == pytest.approx(10.125)
    assert cf.lemma7_threshold(16, 13) == pytest.approx(7.175)
    assert cf.lemma7_threshold(10, 7) is None
    assert cf.lemma7_threshold(10, 6) == pytest.approx(4.275)
    assert cf.lemma7_threshold(21, 19) is None


def test_zheng_examples():
    assert cf.zheng_upper_bound(5, 4) == pytest.approx(2.5)
    assert cf.zheng_upper_bound(2, 1) == pytest.approx(1.0)
    b = cf.zheng_upper_bound(8, 8)
    assert b == pytest.approx(0.5 * (math.sqrt(7) + 1 / math.sqrt(7)) * 3)
    assert b == pytest.approx(4.5356, abs=1e-4)
    assert b > max(3.3765, 3.4571, 3.3755, 3.1534)


@pytest.mark.parametrize("sc", cf.SIGN_CONDITIONS, ids=lambda s: s.name)
def test_sign_conditions(sc):
    for n in range(sc.n_min, 201):
        v = sc.direct(n)
        assert (v > 0) if sc.positive else (v < 0), n


def test_printed_simplifications():
    # exact substitution, compared with the published simplified forms
    g3 = SYMPY_G3
    a = (N - R(8, 5)) / 2
    exact0 = sp.expand(g3.subs(rho, a))
    exact1 = sp.expand(sp.diff(g3, rho).subs(rho, a))
    sc0, sc1 = cf.SIGN_CONDITIONS[4], cf.SIGN_CONDITIONS[5]
    for n in (17, 40):
        # the published g3 value misprints the linear coefficient (-54663/12500 for -54663/62500)
        assert float(exact0.subs(N, n) - sc0.printed(sp.Integer(n))) == pytest.approx(54663 * n / 15625, abs=1e-5)
        # the published g3' value misprints the constant (72954/3125 for 12954/3125)
        assert float(exact1.subs(N, n) - sc1.printed(sp.Integer(n))) == pytest.approx(-96 / 5, abs=1e-5)
    for sc in cf.SIGN_CONDITIONS:
        if sc in (sc0, sc1):
            continue
        for n in (sc.n_min, 30, 101):
            assert sc.printed(n) == pytest.approx(sc.direct(n), rel=1e-9, abs=1e-9)
