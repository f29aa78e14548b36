"""Exact dispersion relation omega(k) of the BGK hydrodynamic branch.

The Gaussian case solves (w+1) = I(A), A = (1+w)^2/k^2, where I is the
velocity-space resolvent averaged over the Maxwellian; the bounded-support
case solves the analogous condition on [-1, 1].  These solvers are the
ground truth the resummation and the spectral branches are checked against.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from scipy.special import erfcx

from .borel import ce_truncation_eval, resum_dispersion
from .ce import WeightKind, WeightModel, build_source_series, ce_coefficients
from .spectral import NoBranchPoint, trace_branch


class NoRootInInterval(Exception):
    """The safeguarded bracket (-1, 0] contains no sign change."""


class SeriesDivergent(Exception):
    """Moment series left its convergence region during the solve."""


class Method(enum.Enum):
    EXACT_GAUSSIAN = "exact-gaussian"
    EXACT_BOUNDED = "exact-bounded"
    RESUMMED = "resummed"
    BRANCH = "branch"
    CE_TRUNCATION = "ce-truncation"


@dataclass(frozen=True)
class DispersionSample:
    k: float
    omega: float
    residual: float
    method: Method


def gaussian_resolvent(A: float) -> float:
    """I(A) = sqrt(pi A/2) exp(A/2) erfc(sqrt(A/2)).

    Closed form of the Maxwellian average of A/(A + v^2); the scaled
    complementary error function keeps it finite at large A.
    """
    if A <= 0:
        raise ValueError("A must be positive")
    u = math.sqrt(A / 2.0)
    return math.sqrt(math.pi) * u * float(erfcx(u))


def _gaussian_resolvent_dA(A: float) -> float:
    """dI/dA, from erfcx'(u) = 2 u erfcx(u) - 2/sqrt(pi)."""
    u = math.sqrt(A / 2.0)
    e = float(erfcx(u))
    dI_du = math.sqrt(math.pi) * (e + 2 * u * u * e) - 2 * u
    return dI_du / (4 * u)


def _safeguarded_newton(f, fprime, lo, hi, x0, tol, max_iter=100):
    """Newton iteration that falls back to bisection on a sign-change bracket."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise NoRootInInterval(
            f"no sign change on [{lo:.6g}, {hi:.6g}] (f = {flo:.3g}, {fhi:.3g})"
        )
    x = min(max(x0, lo), hi)
    for _ in range(max_iter):
        fx = f(x)
        if fx == 0.0:
            return x
        if fx * flo < 0:
            hi = x
        else:
            lo, flo = x, fx
        d = fprime(x)
        x_new = x - fx / d if d != 0 else math.nan
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) < tol:
            return x_new
        x = x_new
    return x


def solve_exact_gaussian(k: float, tol: float = 1e-14) -> DispersionSample:
    """Root of (w+1) - I((1+w)^2/k^2) on the hydrodynamic interval (-1, 0].

    Starts from the 4th-order gradient estimate -k^2 + k^4 for small k.
    The kinetic eigenvalue w = -1 is excluded by construction.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if tol < 1e-16:
        raise ValueError("tol too small for double precision")

    def f(w):
        return (w + 1) - gaussian_resolvent((1 + w) ** 2 / (k * k))

    def fprime(w):
        A = (1 + w) ** 2 / (k * k)
        return 1 - _gaussian_resolvent_dA(A) * 2 * (1 + w) / (k * k)

    x0 = -k * k + k**4 if k <= 0.5 else -0.2
    w = _safeguarded_newton(f, fprime, -1 + 1e-9, 0.0, x0, tol)
    return DispersionSample(k, w, abs(f(w)), Method.EXACT_GAUSSIAN)


def _bounded_series_sum(w_model: WeightModel, x: float, n_terms: int = 60) -> float:
    """Sum of the bounded-weight moment series at x, with divergence guard."""
    F = build_source_series(w_model, n_terms)
    total = 0.0
    prev_term = math.inf
    growing = 0
    for m in range(1, n_terms + 1):
        term = float(F.coeffs[m]) * x**m
        total += term
        if abs(term) > prev_term:
            growing += 1
            if growing >= 3 and abs(term) > 1e-12:
                raise SeriesDivergent(
                    f"moment series terms growing at x = {x:.6g}"
                )
        else:
            growing = 0
        prev_term = abs(term)
    return total


def solve_exact_bounded(
    k: float, w: WeightModel, tol: float = 1e-14
) -> DispersionSample:
    """Hydrodynamic root for a bounded-support weight.

    The uniform weight admits the closed condition arctan(k/(1+w)) = k
    (imaginary part cancels by symmetry); custom weights are solved through
    their moment series with a convergence check on x = k^2/(1+w)^2.
    """
    if not w.bounded:
        raise ValueError("use solve_exact_gaussian for the Gaussian weight")
    if k == 0:
        return DispersionSample(0.0, 0.0, 0.0, Method.EXACT_BOUNDED)
    if k < 0:
        raise ValueError("k must be non-negative")

    if w.kind is WeightKind.BOUNDED_UNIFORM:

        def f(om):
            return math.atan(k / (1 + om)) - k

        def fprime(om):
            a = 1 + om
            return -k / (a * a + k * k)

        root = _safeguarded_newton(f, fprime, -1 + 1e-12, 0.0, -k * k / 3, tol)
        return DispersionSample(k, root, abs(f(root)), Method.EXACT_BOUNDED)

    def f(om):
        x = k * k / (1 + om) ** 2
        return om - _bounded_series_sum(w, x)

    def fprime(om, h=1e-7):
        return (f(om + h) - f(om - h)) / (2 * h)

    # the moment series is only summable for x = k^2/(1+om)^2 below ~1
    # (monotone moments <= 1), so the bracket stops at 1 + om = k
    lo = max(-1 + 1e-6, k - 1 + 1e-7)
    try:
        root = _safeguarded_newton(f, fprime, lo, 0.0, -k * k / 3, tol)
    except NoRootInInterval as exc:
        raise SeriesDivergent(
            f"root at k = {k:.6g} lies outside the moment series' "
            "convergence region"
        ) from exc
    return DispersionSample(k, root, abs(f(root)), Method.EXACT_BOUNDED)


@dataclass
class ComparisonTable:
    """Per-method omega values (and deviations from exact) on a k grid."""

    k_grid: list
    columns: dict  # name -> list of float (NaN marks missing cells)

    def column(self, name: str) -> list:
        return self.columns[name]


def compare_methods(
    k_grid: Sequence[float],
    branch_orders: Iterable[int] = (1, 2, 20, 50),
    pade_L: int = 14,
    pade_M: int = 14,
    n_max: Optional[int] = None,
) -> ComparisonTable:
    """Evaluate every method of reconstructing omega(k) on a common grid.

    Columns: omega_exact, omega_resummed, omega_branch_n{X} with a
    physical_n{X} companion flag, omega_ce2, omega_ce4, and dev_* columns
    relative to the exact solver.  Per-method failures become NaN cells.
    """
    ks = [float(k) for k in k_grid]
    if any(k < 0 or k > 1.2 + 1e-9 for k in ks):
        raise ValueError("grid must lie within [0, 1.2]")
    branch_orders = tuple(branch_orders)
    if n_max is None:
        n_max = pade_L + pade_M + 1
    coeffs = ce_coefficients(WeightModel.gaussian(), n_max)
    resum = resum_dispersion(coeffs, pade_L, pade_M)
    branches = {n: trace_branch(n) for n in branch_orders}

    cols: dict = {"k": ks}

    def run(fn):
        out = []
        for k in ks:
            try:
                out.append(float(fn(k)))
            except Exception:
                out.append(math.nan)
        return out

    exact = run(lambda k: 0.0 if k == 0 else solve_exact_gaussian(k).omega)
    cols["omega_exact"] = exact
    cols["omega_resummed"] = run(resum)
    for n in branch_orders:
        curve = branches[n]
        vals, phys = [], []
        for k in ks:
            try:
                vals.append(curve.omega_at(k))
                phys.append(True)
            except NoBranchPoint:
                vals.append(math.nan)
                phys.append(False)
        cols[f"omega_branch_n{n}"] = vals
        cols[f"physical_n{n}"] = phys
    cols["omega_ce2"] = run(lambda k: ce_truncation_eval(coeffs, 2, k))
    cols["omega_ce4"] = run(lambda k: ce_truncation_eval(coeffs, 4, k))

    for name in list(cols):
        if name.startswith("omega_") and name != "omega_exact":
            cols["dev_" + name[len("omega_"):]] = [
                v - e for v, e in zip(cols[name], exact)
            ]
    return ComparisonTable(ks, cols)
