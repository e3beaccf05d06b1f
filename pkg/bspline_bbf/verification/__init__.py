"""Exact identity checks and invariant reports for coefficient tables."""

from .checks import CheckResult, VerificationReport, VerificationTolerances, run_checks, sample_points
from .identities import (
    differential_recurrence,
    first_identity,
    main_recurrence_residual,
    sampled_identity_residuals,
    second_identity,
)
from .piecewise import BasisCatalog, PiecewisePolynomial, bspline_piecewise

__all__ = [
    'BasisCatalog',
    'CheckResult',
    'PiecewisePolynomial',
    'VerificationReport',
    'VerificationTolerances',
    'bspline_piecewise',
    'differential_recurrence',
    'first_identity',
    'main_recurrence_residual',
    'run_checks',
    'sample_points',
    'sampled_identity_residuals',
    'second_identity',
]
