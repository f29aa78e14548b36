from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from attractor_kit.exactseries import (
    NonzeroConstant,
    OrderExceeded,
    TruncatedSeries,
    ZeroConstantTerm,
    coefficient_of,
    lagrange_coefficient,
    series_compose,
    series_derivative,
    series_int_pow,
    series_mul,
    series_reciprocal,
)


def S(*coeffs):
    return TruncatedSeries(tuple(Fr(c) for c in coeffs))


# --- independent oracles -------------------------------------------------

def mul_oracle(a, b):
    """Brute-force double-loop convolution."""
    n = min(a.order, b.order)
    out = [Fr(0)] * (n + 1)
    for k in range(n + 1):
        for i in range(k + 1):
            out[k] += a.coeffs[i] * b.coeffs[k - i]
    return TruncatedSeries(tuple(out))


def recip_oracle(a):
    """Term-by-term long division, independent of the Newton path."""
    n = a.order
    c = [1 / a.coeffs[0]] + [Fr(0)] * n
    for m in range(1, n + 1):
        c[m] = -sum(a.coeffs[j] * c[m - j] for j in range(1, m + 1)) / a.coeffs[0]
    return TruncatedSeries(tuple(c))


small_fraction = st.fractions(
    min_value=-10, max_value=10, max_denominator=6
)


def series_strategy(min_order=0, max_order=8):
    return st.lists(
        small_fraction, min_size=min_order + 1, max_size=max_order + 1
    ).map(lambda cs: TruncatedSeries(tuple(cs)))


# --- series_mul ----------------------------------------------------------

def test_mul_difference_of_squares():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)


def test_mul_identity_element():
    s = S(3, Fr(-1, 2), 7, 0)
    one = TruncatedSeries.constant(1, s.order)
    assert series_mul(one, s) == s


def test_mul_quadratic_square_truncated():
    # (-x + 3x^2)^2 at order 3, by hand: x^2 - 6x^3 (+ 9x^4 dropped)
    s = S(0, -1, 3, 0)
    assert series_mul(s, s) == S(0, 0, 1, -6)


def test_mul_truncates_to_shorter_operand():
    assert series_mul(S(1, 1), S(1, 1, 1, 1)).order == 1


@given(series_strategy(), series_strategy())
def test_mul_matches_bruteforce_oracle(a, b):
    assert series_mul(a, b) == mul_oracle(a, b)


@settings(deadline=None)
@given(series_strategy(3, 6), series_strategy(3, 6), series_strategy(3, 6))
def test_ring_axioms(a, b, c):
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c)
    assert series_mul(a, b) == series_mul(b, a)


# --- powers and reciprocal -----------------------------------------------

def test_int_pow_binomial_series():
    assert series_int_pow(S(1, 1, 0, 0), -2) == S(1, -2, 3, -4)


def test_int_pow_zeroth_power():
    assert series_int_pow(S(5, -3, 2), 0) == S(1, 0, 0)


def test_int_pow_negative_fourth():
    # frozen from the reciprocal + multiplication oracle below
    a = S(1, -1, 3)
    r = recip_oracle(a)
    expected = mul_oracle(mul_oracle(r, r), mul_oracle(r, r))
    assert expected == S(1, 4, -2)
    assert series_int_pow(a, -4) == expected


def test_int_pow_negative_requires_unit():
    with pytest.raises(ZeroConstantTerm):
        series_int_pow(S(0, 1, 2), -1)


@given(series_strategy(2, 8), st.fractions(min_value=1, max_value=10, max_denominator=4))
def test_reciprocal_times_self_is_one(a, c0):
    a = TruncatedSeries((c0,) + a.coeffs[1:])
    prod = series_mul(series_reciprocal(a), a)
    assert prod == TruncatedSeries.constant(1, a.order)


@given(series_strategy(2, 8))
def test_newton_reciprocal_matches_division_oracle(a):
    if a.coeffs[0] == 0:
        a = TruncatedSeries((Fr(1),) + a.coeffs[1:])
    assert series_reciprocal(a) == recip_oracle(a)


# --- derivative and coefficient extraction --------------------------------

def test_derivative_monomial():
    assert series_derivative(S(0, 0, 0, 1)) == S(0, 0, 3)


def test_derivative_constant_is_zero():
    assert series_derivative(S(42)) == S(0)


def test_derivative_termwise():
    assert series_derivative(S(0, -1, 3, -15)) == S(-1, 6, -45)


def test_coefficient_of_basic():
    assert coefficient_of(S(1, -2, 3), 1) == -2
    assert coefficient_of(S(7, 1), 0) == 7


def test_coefficient_of_binomial():
    assert coefficient_of(series_int_pow(S(1, 1, 0), -2), 2) == 3


def test_coefficient_of_past_order_raises():
    with pytest.raises(OrderExceeded):
        coefficient_of(S(1, 2), 2)


# --- composition -----------------------------------------------------------

def test_compose_polynomial():
    # (1 + u)^2 at u = x + x^2, order 2: 1 + 2x + 3x^2
    assert series_compose(S(1, 2, 1), S(0, 1, 1)) == S(1, 2, 3)


def test_compose_requires_zero_inner_constant():
    with pytest.raises(NonzeroConstant):
        series_compose(S(1, 1), S(1, 1))


# --- Lagrange inversion ----------------------------------------------------

def gaussian_source(order):
    mu, coeffs = 1, [Fr(0)]
    for m in range(1, order + 1):
        mu *= 2 * m - 1  # (2m-1)!!
        coeffs.append(Fr((-1) ** m * mu))
    return TruncatedSeries(tuple(coeffs))


def uniform_source(order):
    return TruncatedSeries(
        (Fr(0),) + tuple(Fr((-1) ** m, 2 * m + 1) for m in range(1, order + 1))
    )


def test_lagrange_gaussian_first():
    assert lagrange_coefficient(gaussian_source(1), 1) == -1


def test_lagrange_gaussian_fourth():
    assert lagrange_coefficient(gaussian_source(4), 4) == 27


def test_lagrange_uniform_second():
    # frozen from the undetermined-coefficients oracle:
    # substituting w = a1 k^2 + a2 k^4 into w = F(k^2 (1+w)^-2) gives
    # a1 = -1/3 and, at order k^4, a2 = 2 a1/3 + 1/5 = -1/45
    assert lagrange_coefficient(uniform_source(2), 2) == Fr(-1, 45)


def test_lagrange_validates_input():
    with pytest.raises(NonzeroConstant):
        lagrange_coefficient(S(1, -1), 1)
    with pytest.raises(OrderExceeded):
        lagrange_coefficient(gaussian_source(2), 3)


def inversion_residual(F, n_max):
    """w(x) from Lagrange coefficients, substituted back into w = F(x(1+w)^-2).

    Returns the coefficient-wise residual series; exact zero means the
    implicit relation is satisfied through the retained order.
    """
    w = TruncatedSeries(
        (Fr(0),)
        + tuple(lagrange_coefficient(F, n) for n in range(1, n_max + 1))
    )
    one_plus = w + TruncatedSeries.constant(1, n_max)
    inv2 = series_int_pow(one_plus, -2)
    # multiply by x: shift up one slot, keep the order
    x_of = TruncatedSeries((Fr(0),) + inv2.coeffs[:-1])
    return w - series_compose(F.truncate(n_max), x_of)


@pytest.mark.parametrize("source", [gaussian_source, uniform_source])
def test_inversion_residual_exactly_zero(source):
    res = inversion_residual(source(8), 8)
    assert all(c == 0 for c in res.coeffs)


@settings(deadline=None, max_examples=25)
@given(st.lists(small_fraction, min_size=5, max_size=7))
def test_inversion_residual_random_sources(tail):
    # F(0) = 0 and F'(0) != 0 so the inversion is well posed
    F = TruncatedSeries((Fr(0), Fr(-1)) + tuple(tail))
    res = inversion_residual(F, F.order)
    assert all(c == 0 for c in res.coeffs)
