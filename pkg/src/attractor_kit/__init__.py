"""Exact gradient expansion and attractor reconstruction for the 1D BGK model.

Submodules
----------
exactseries : exact rational truncated power series and Lagrange inversion
ce          : weight models, coefficients a_2n, large-order ratio analysis
borel       : Borel transform, Pade approximants, Laplace resummation
spectral    : spectral polynomials, branch continuation, fold points
dispersion  : exact dispersion solvers (Gaussian and bounded-support)
cli         : command-line front-end (attractor-kit)
"""

__version__ = "0.1.0"

from .exactseries import (
    Rational,
    TruncatedSeries,
    coefficient_of,
    lagrange_coefficient,
    series_compose,
    series_derivative,
    series_int_pow,
    series_mul,
    series_reciprocal,
)
from .ce import (
    CECoefficients,
    WeightKind,
    WeightModel,
    build_source_series,
    ce_coefficients,
    radius_estimate,
    ratio_sequence,
)
from .borel import (
    BorelSeries,
    PadeApproximant,
    ResummedDispersion,
    borel_transform,
    ce_truncation_eval,
    laplace_resum,
    pade,
    resum_dispersion,
)
from .spectral import (
    BranchCurve,
    FoldPoint,
    SpectralEval,
    eval_P,
    find_fold,
    trace_branch,
)
from .dispersion import (
    DispersionSample,
    Method,
    compare_methods,
    gaussian_resolvent,
    solve_exact_bounded,
    solve_exact_gaussian,
)
