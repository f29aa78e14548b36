import math
from fractions import Fraction as Fr

import numpy as np
import pytest

from attractor_kit.borel import (
    PoleOnContour,
    SingularPadeSystem,
    borel_transform,
    ce_truncation_eval,
    laplace_resum,
    pade,
    resum_dispersion,
)
from attractor_kit.ce import WeightModel, ce_coefficients
from attractor_kit.dispersion import solve_exact_gaussian

# int_0^inf e^{-t} / (1 + 0.2 t) dt, frozen from 30-digit adaptive quadrature
LAPLACE_GEOMETRIC_X01 = 0.85211088142366100906


@pytest.fixture(scope="module")
def gaussian_30():
    return ce_coefficients(WeightModel.gaussian(), 30)


# --- Borel transform -------------------------------------------------------

def test_borel_of_gradient_coefficients(gaussian_30):
    b = borel_transform(gaussian_30)
    assert b.coeffs[0] == -1
    assert b.coeffs[6] == Fr(-38232, 5040)


def test_borel_of_factorials_is_all_ones():
    b = borel_transform([Fr(math.factorial(n)) for n in range(1, 9)])
    assert all(c == 1 for c in b.coeffs)


def central_binomial(m):
    return math.comb(2 * m, m)


def test_borel_of_source_series_matches_sqrt_closed_form():
    # Taylor of 1/sqrt(1+2s) - 1 via the independent binomial identity
    # sum C(2m,m) y^m = (1-4y)^(-1/2) evaluated at y = -s/2:
    # coefficient of s^m is (-1)^m C(2m,m) / 2^m
    mu = 1
    source = []
    for m in range(1, 31):
        mu *= 2 * m - 1
        source.append(Fr((-1) ** m * mu))
    b = borel_transform(source)
    for m in range(1, 31):
        assert b.coeffs[m - 1] == Fr((-1) ** m * central_binomial(m), 2**m)


# --- Pade ------------------------------------------------------------------

def test_pade_recovers_simple_pole():
    taylor = [(-2.0) ** n for n in range(5)]  # 1/(1+2s)
    p = pade(taylor, 0, 1)
    assert p.den == pytest.approx([1.0, 2.0], abs=1e-12)
    assert p.poles == pytest.approx([-0.5], abs=1e-12)


def test_pade_constant():
    p = pade([3.5, 0.0, 0.0], 0, 0)
    assert p(17.0) == 3.5
    assert len(p.poles) == 0


def test_pade_taylor_match_through_L_plus_M(gaussian_30):
    taylor = borel_transform(gaussian_30).taylor()[:29]
    p = pade(taylor, 14, 14)
    # numerator = denominator * series through order L+M
    conv = np.convolve(p.den, taylor)[:29]
    conv[:15] -= p.num
    assert np.max(np.abs(conv)) < 1e-6 * max(abs(t) for t in taylor)


def test_pade_pole_count_and_sqrt_branch_cut():
    # genuine poles of [14/14] to 1/sqrt(1+2s) - 1 line the cut s <= -1/2
    mu = 1
    taylor = [0.0]
    for m in range(1, 29):
        mu *= 2 * m - 1
        taylor.append((-1) ** m * mu / math.factorial(m))
    p = pade(taylor, 14, 14)
    assert len(p.poles) == 14
    genuine = p.physical_poles
    assert len(genuine) >= 10
    assert all(abs(z.imag) < 1e-6 for z in genuine)
    assert all(z.real < -0.5 for z in genuine)


def test_pade_singular_system_raises():
    with pytest.raises(SingularPadeSystem):
        pade([0.0, 0.0, 1.0], 0, 1)


def test_pade_rejects_short_input():
    with pytest.raises(ValueError):
        pade([1.0, 2.0], 1, 1)


# --- Laplace resummation ----------------------------------------------------

def test_laplace_resum_of_zero_is_zero():
    p = pade([0.0, 0.0, 0.0], 0, 0)
    for x in (0.01, 0.5, 3.0):
        assert laplace_resum(p, x) == 0.0


def test_laplace_resum_geometric_kernel_vs_quadrature_oracle():
    taylor = [(-2.0) ** n for n in range(5)]
    p = pade(taylor, 0, 1)
    assert laplace_resum(p, 0.1) == pytest.approx(
        LAPLACE_GEOMETRIC_X01, abs=1e-10
    )


def test_laplace_resum_detects_positive_axis_pole():
    p = pade([1.0, 1.0, 1.0], 0, 1)  # 1/(1-s), genuine pole at +1
    with pytest.raises(PoleOnContour):
        laplace_resum(p, 0.5)


def test_laplace_resum_requires_positive_x(gaussian_30):
    r = resum_dispersion(gaussian_30, 14, 14)
    with pytest.raises(ValueError):
        laplace_resum(r.approximant, 0.0)


# --- resummed dispersion -----------------------------------------------------

def test_resummation_is_zero_at_origin(gaussian_30):
    assert resum_dispersion(gaussian_30, 14, 14)(0.0) == 0.0


def test_resummation_matches_exact_solver(gaussian_30):
    r = resum_dispersion(gaussian_30, 14, 14)
    for k in (0.2, 0.5, 0.9):
        assert r(k) == pytest.approx(solve_exact_gaussian(k).omega, abs=1e-6)


def test_low_order_resummation_beats_ce4(gaussian_30):
    k = 0.3
    exact = solve_exact_gaussian(k).omega
    r11 = resum_dispersion(gaussian_30, 1, 1)
    ce4 = -(k**2) + k**4
    assert abs(r11(k) - exact) < abs(ce4 - exact)


def test_resummation_within_first_omitted_term_of_ce10(gaussian_30):
    r = resum_dispersion(gaussian_30, 14, 14)
    for k in (0.1, 0.2, 0.3):
        partial = ce_truncation_eval(gaussian_30, 10, k)
        omitted = abs(float(gaussian_30.values[5])) * k**12
        assert abs(r(k) - partial) <= omitted


# --- truncations --------------------------------------------------------------

def test_ce_truncations(gaussian_30):
    assert ce_truncation_eval(gaussian_30, 2, 0.5) == -0.25
    assert ce_truncation_eval(gaussian_30, 4, 0.5) == -0.1875
    assert ce_truncation_eval(gaussian_30, 0, 0.7) == 0.0


def test_ce_truncation_order_bound(gaussian_30):
    with pytest.raises(ValueError):
        ce_truncation_eval(gaussian_30, 62, 0.5)
