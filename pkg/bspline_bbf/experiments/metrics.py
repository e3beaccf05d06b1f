"""
Correct decimal digits of a computed value against a reference.
"""

import math
from fractions import Fraction
from typing import Any

DIGIT_CAP = 18.0


def _exact(value: Any) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(float(value))


def correct_digits(computed: Any, reference: Any, cap: float = DIGIT_CAP) -> float:
    """
    -log10 of the relative error, clipped to [0, cap].

    A zero reference scores -log10|computed| (cap when computed is also 0).
    The error is formed in exact arithmetic so that it is not itself rounded.
    """
    computed, reference = _exact(computed), _exact(reference)
    if reference == 0:
        if computed == 0:
            return float(cap)
        error = abs(computed)
    else:
        error = abs(computed - reference) / abs(reference)
    if error == 0:
        return float(cap)
    # log10 of a Fraction stays finite even when float(error) would underflow
    digits = -(math.log10(error.numerator) - math.log10(error.denominator))
    return min(float(cap), max(0.0, digits))
