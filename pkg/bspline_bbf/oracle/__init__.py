"""
Reference computations of B-spline values and derivatives.

Independent of the conversion algorithms: the divided-difference definition,
the truncated power, and the de Boor-Cox recurrence.
"""

from .deboor_cox import (
    deboor_cox_derivative,
    deboor_cox_eval,
    deboor_cox_eval_degree,
    evaluate_bspline,
)
from .divided_difference import (
    BSplineValue,
    OracleError,
    UnsupportedConfluency,
    bspline_value_definition,
    divided_difference_truncated_power,
    truncated_power,
)

__all__ = [
    'BSplineValue',
    'OracleError',
    'UnsupportedConfluency',
    'bspline_value_definition',
    'deboor_cox_derivative',
    'deboor_cox_eval',
    'deboor_cox_eval_degree',
    'divided_difference_truncated_power',
    'evaluate_bspline',
    'truncated_power',
]
