"""
Pytest configuration and fixtures for the bspline-bbf test suite.
"""

import os
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

from bspline_bbf.knots import validate

from .strategies import bezier_knots, uniform_knots


@pytest.fixture
def temp_dir():
    """Create a temporary directory for files written by a test."""
    with tempfile.TemporaryDirectory() as tmp:
        yield Path(tmp)


@pytest.fixture
def uniform_cubic():
    return uniform_knots(3, 4)


@pytest.fixture
def bezier_cubic():
    return bezier_knots(3)


@pytest.fixture
def clamped_quadratic():
    return validate(2, 3, [0, 0, 0, 1, 2, 3, 3, 3])


@pytest.fixture
def uneven_quadratic():
    return validate(2, 3, [0, 0, 0, 1, 3, 4, 4, 4])


@pytest.fixture
def rational_cubic():
    """Clamped cubic with a double inner knot and non-integer spacing."""
    values = [Fraction(0)] * 4 + [Fraction(1, 3), Fraction(1, 3), Fraction(5, 4)] + [Fraction(2)] * 4
    return validate(3, 4, values)


@pytest.fixture
def cubic_knot_file(temp_dir):
    path = temp_dir / "cubic.json"
    path.write_text('{"degree": 3, "spans": 4, "knots": [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]}\n',
                    encoding='utf-8')
    return path


@pytest.fixture(autouse=True)
def setup_test_environment():
    """Keep log output off stdout-sensitive tests."""
    test_env = {
        "BSPLINE_BBF_LOG_LEVEL": "ERROR",
    }

    original_env = {}
    for key, value in test_env.items():
        original_env[key] = os.environ.get(key)
        os.environ[key] = value

    yield

    for key, value in original_env.items():
        if value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = value
