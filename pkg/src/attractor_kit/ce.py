"""Gradient-expansion coefficients for the 1D BGK dispersion relation.

The equilibrium velocity distribution enters only through its even moments
mu_{2m}.  The Gaussian (unbounded velocities) gives mu_{2m} = (2m-1)!!, the
uniform weight on [-1, 1] gives 1/(2m+1), and arbitrary bounded-support
moment sequences are accepted after validation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .exactseries import (
    TruncatedSeries,
    series_derivative,
    series_int_pow,
    series_mul,
)


class InsufficientData(Exception):
    """Not enough coefficients for the requested analysis."""


class InvalidWeight(Exception):
    """Moment sequence violates the bounded-support invariants."""


def double_factorial(m: int) -> int:
    """(2m-1)!! as an exact integer (direct product, no shortcuts)."""
    out = 1
    for i in range(1, 2 * m, 2):
        out *= i
    return out


class WeightKind(enum.Enum):
    GAUSSIAN = "gaussian"
    BOUNDED_UNIFORM = "bounded-uniform"
    BOUNDED_CUSTOM = "bounded-custom"


@dataclass(frozen=True)
class WeightModel:
    """Even-moment sequence mu_{2m} of an equilibrium velocity distribution."""

    kind: WeightKind
    _moments: Callable[[int], Fraction] = field(compare=False)

    def moment(self, m: int) -> Fraction:
        """mu_{2m}; mu_0 = 1 by normalization."""
        if m == 0:
            return Fraction(1)
        return self._moments(m)

    @property
    def bounded(self) -> bool:
        return self.kind is not WeightKind.GAUSSIAN

    @classmethod
    def gaussian(cls) -> "WeightModel":
        return cls(WeightKind.GAUSSIAN, lambda m: Fraction(double_factorial(m)))

    @classmethod
    def bounded_uniform(cls) -> "WeightModel":
        # W(v) = 1/2 on [-1, 1]: mu_{2m} = 1/(2m+1)
        return cls(WeightKind.BOUNDED_UNIFORM, lambda m: Fraction(1, 2 * m + 1))

    @classmethod
    def bounded_custom(cls, moments: Sequence[Fraction]) -> "WeightModel":
        """Weight from an explicit sequence mu_2, mu_4, ...

        Bounded support on [-1, 1] forces 0 < mu_{2(m+1)} <= mu_{2m} <= 1;
        sequences violating this are rejected.
        """
        mus = [Fraction(mu) for mu in moments]
        prev = Fraction(1)
        for i, mu in enumerate(mus):
            if not (0 < mu <= 1):
                raise InvalidWeight(f"mu_{2 * (i + 1)} = {mu} outside (0, 1]")
            if mu > prev:
                raise InvalidWeight(
                    f"moments must be non-increasing; mu_{2 * (i + 1)} = {mu} "
                    f"> mu_{2 * i} = {prev}"
                )
            prev = mu

        def mom(m: int) -> Fraction:
            if m > len(mus):
                raise InsufficientData(
                    f"custom weight supplies {len(mus)} moments; "
                    f"mu_{2 * m} requested"
                )
            return mus[m - 1]

        return cls(WeightKind.BOUNDED_CUSTOM, mom)


def build_source_series(w: WeightModel, order: int) -> TruncatedSeries:
    """Sum_{m=1..order} (-1)^m mu_{2m} x^m, the source of the implicit relation."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [Fraction(0)]
    for m in range(1, order + 1):
        coeffs.append((-1) ** m * w.moment(m))
    return TruncatedSeries(tuple(coeffs))


@dataclass(frozen=True)
class CECoefficients:
    """Exact coefficients a_{2n} of the inverted series w(k) = sum a_{2n} k^{2n}."""

    values: tuple
    weight: WeightModel

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def ce_coefficients(w: WeightModel, n_max: int) -> CECoefficients:
    """All coefficients a_{2n}, n = 1..n_max, by Lagrange inversion.

    Equivalent to calling ``lagrange_coefficient`` for each n, but the
    reciprocal-square power (1+F)^{-2n} is accumulated incrementally so the
    whole run costs two series products per order.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    F = build_source_series(w, n_max)
    Fp = series_derivative(F)  # order n_max - 1, enough for [x^{n-1}]
    one_plus = F + TruncatedSeries.constant(1, n_max)
    recip_sq = series_int_pow(one_plus, -2)
    power = TruncatedSeries.constant(1, n_max)
    values = []
    for n in range(1, n_max + 1):
        power = series_mul(power, recip_sq)  # (1+F)^{-2n}
        g = series_mul(Fp, power)
        values.append(g.coeffs[n - 1] / n)
    return CECoefficients(tuple(values), w)


def ratio_sequence(c: CECoefficients) -> list:
    """Successive ratios r_n = |a_{2(n+1)} / a_{2n}| as floats, n = 1..N-1."""
    if len(c) < 2:
        raise InsufficientData("need at least two coefficients for ratios")
    out = []
    for n in range(len(c) - 1):
        if c.values[n] == 0:
            raise ZeroDivisionError(
                f"a_{2 * (n + 1)} = 0: degenerate weight model"
            )
        out.append(abs(float(c.values[n + 1] / c.values[n])))
    return out


@dataclass(frozen=True)
class RadiusEstimate:
    """Extrapolated convergence radius of the k^2 series, with divergence flag."""

    radius: float
    divergent: bool


# below this extrapolated radius the series is reported as divergent
_DIVERGENT_RADIUS = 1e-2


def radius_estimate(c: CECoefficients) -> RadiusEstimate:
    """Estimate lim 1/r_n by fitting 1/r_n linearly against 1/n.

    Uses the last third of the available ratios.  A limit consistent with
    zero is reported as divergent evidence, not asserted as a theorem.
    """
    if len(c) < 8:
        raise InsufficientData("radius extrapolation needs >= 8 coefficients")
    ratios = ratio_sequence(c)
    m = max(len(ratios) // 3, 3)
    n = np.arange(1, len(ratios) + 1)[-m:]
    y = 1.0 / np.asarray(ratios[-m:])
    slope, intercept = np.polyfit(1.0 / n, y, 1)
    radius = max(float(intercept), 0.0)
    return RadiusEstimate(radius, radius < _DIVERGENT_RADIUS)


def growth_normalized(c: CECoefficients) -> list:
    """|a_{2n}| / (n! 2^n) for each n: flat when growth is factorial-times-2^n."""
    return [
        abs(float(Fraction(a) / (math.factorial(n) * 2**n)))
        for n, a in enumerate(c.values, start=1)
    ]
