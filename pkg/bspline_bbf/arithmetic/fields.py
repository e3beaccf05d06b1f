"""
Scalar fields used by the conversion algorithms.

Every algorithm in the package is written against plain Python operators, so
the same code runs over machine floats, exact rationals, or instrumented
scalars that count arithmetic operations. A ScalarField only decides how raw
knot values and integer constants enter the computation.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]


class ScalarField(ABC):
    """Conversion rules for one scalar type."""

    name: str = "abstract"

    @abstractmethod
    def convert(self, value: Any) -> Any:
        """Bring a raw number into the field."""

    @abstractmethod
    def ratio(self, numerator: int, denominator: int) -> Any:
        """Exact constant numerator/denominator (not an arithmetic operation)."""

    @property
    def zero(self) -> Any:
        return self.convert(0)

    @property
    def one(self) -> Any:
        return self.convert(1)

    def convert_all(self, values: Iterable[Any]) -> Tuple[Any, ...]:
        return tuple(self.convert(v) for v in values)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class FloatField(ScalarField):
    """IEEE double precision."""

    name = "float"

    def convert(self, value: Any) -> float:
        return float(value)

    def ratio(self, numerator: int, denominator: int) -> float:
        return numerator / denominator


class RationalField(ScalarField):
    """Exact arithmetic with fractions.Fraction; floats convert without rounding."""

    name = "rational"

    def convert(self, value: Any) -> Fraction:
        if isinstance(value, CountedScalar):
            value = value.value
        return Fraction(value)

    def ratio(self, numerator: int, denominator: int) -> Fraction:
        return Fraction(numerator, denominator)


class CountedScalar:
    """Float wrapper whose arithmetic increments a shared OperationCounter."""

    __slots__ = ("value", "counter")

    def __init__(self, value: float, counter: "OperationCounter"):
        self.value = value
        self.counter = counter

    def _wrap(self, value: float) -> "CountedScalar":
        self.counter.count += 1
        return CountedScalar(value, self.counter)

    @staticmethod
    def _raw(other: Any) -> Any:
        return other.value if isinstance(other, CountedScalar) else other

    def __add__(self, other: Any) -> "CountedScalar":
        return self._wrap(self.value + self._raw(other))

    def __radd__(self, other: Any) -> "CountedScalar":
        return self._wrap(self._raw(other) + self.value)

    def __sub__(self, other: Any) -> "CountedScalar":
        return self._wrap(self.value - self._raw(other))

    def __rsub__(self, other: Any) -> "CountedScalar":
        return self._wrap(self._raw(other) - self.value)

    def __mul__(self, other: Any) -> "CountedScalar":
        return self._wrap(self.value * self._raw(other))

    def __rmul__(self, other: Any) -> "CountedScalar":
        return self._wrap(self._raw(other) * self.value)

    def __truediv__(self, other: Any) -> "CountedScalar":
        return self._wrap(self.value / self._raw(other))

    def __rtruediv__(self, other: Any) -> "CountedScalar":
        return self._wrap(self._raw(other) / self.value)

    def __neg__(self) -> "CountedScalar":
        return self._wrap(-self.value)

    # Comparisons are branch decisions, not arithmetic; they are never counted.
    def __eq__(self, other: object) -> bool:
        return self.value == self._raw(other)

    def __ne__(self, other: object) -> bool:
        return self.value != self._raw(other)

    def __lt__(self, other: Any) -> bool:
        return self.value < self._raw(other)

    def __le__(self, other: Any) -> bool:
        return self.value <= self._raw(other)

    def __gt__(self, other: Any) -> bool:
        return self.value > self._raw(other)

    def __ge__(self, other: Any) -> bool:
        return self.value >= self._raw(other)

    __hash__ = None  # type: ignore[assignment]

    def __float__(self) -> float:
        return float(self.value)

    def __abs__(self) -> float:
        return abs(self.value)

    def __repr__(self) -> str:
        return f"CountedScalar({self.value!r})"


class OperationCounter(ScalarField):
    """
    Float field that counts every +, -, *, / performed on its scalars.

    Constants produced by ``ratio`` and values produced by ``convert`` are free,
    so the count measures the work done by an algorithm on its inputs.
    """

    name = "counting"

    def __init__(self) -> None:
        self.count = 0

    def convert(self, value: Any) -> CountedScalar:
        if isinstance(value, CountedScalar):
            value = value.value
        return CountedScalar(float(value), self)

    def ratio(self, numerator: int, denominator: int) -> CountedScalar:
        return CountedScalar(numerator / denominator, self)

    def reset(self) -> None:
        self.count = 0


FLOAT = FloatField()
RATIONAL = RationalField()

_FIELDS = {FLOAT.name: FLOAT, RATIONAL.name: RATIONAL}


def get_field(name: str) -> ScalarField:
    """Look up a shared field instance by name ("float" or "rational")."""
    try:
        return _FIELDS[name]
    except KeyError:
        raise ValueError(f"Unknown scalar field '{name}', expected one of {sorted(_FIELDS)}")


def is_exact(value: Any) -> bool:
    return isinstance(value, Rational)


def field_for(values: Sequence[Any]) -> ScalarField:
    """RATIONAL when every value is an int or Fraction, FLOAT otherwise."""
    if all(is_exact(v) for v in values):
        return RATIONAL
    return FLOAT
