"""Scalar field plumbing: one exact instantiation, one floating one.

Every algorithm in this library is generic over a scalar "field" in the
duck-typed sense: coefficients are either `fractions.Fraction` (exact mode,
canonical reduced p/q with arbitrary-precision integers) or `float` (fast
mode).  Both support +, -, *, / with Python raising ZeroDivisionError on
division by zero, so no silent non-finite values appear in either mode.
Complex numbers are deliberately not part of this contract; only the
contour module uses them, privately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidParameter, ZeroDenominator

#: Anything accepted as a coefficient.  `int` is allowed on input and
#: behaves exactly; canonical exact values are Fraction.
Scalar = Union[int, Fraction, float]

EXACT = "exact"
FLOAT = "float"


@dataclass(frozen=True)
class Tolerance:
    """Relative/absolute comparison widths used only by float-mode checks."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if self.rel < 0 or self.abs < 0:
            raise InvalidParameter("tolerance components must be nonnegative")


DEFAULT_TOLERANCE = Tolerance()


def is_exact(x: Scalar) -> bool:
    """True when x carries no rounding (int or Fraction)."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def scalar_from_ratio(numerator: int, denominator: int, mode: str = EXACT) -> Scalar:
    """Build the field element numerator/denominator.

    Exact mode returns the reduced Fraction; float mode the nearest double.
    """
    if denominator == 0:
        raise ZeroDenominator(f"ratio {numerator}/0 is undefined")
    value = Fraction(numerator, denominator)
    if mode == EXACT:
        return value
    if mode == FLOAT:
        return float(value)
    raise InvalidParameter(f"unknown scalar mode {mode!r}")


def scalar_from_int(n: int, mode: str = EXACT) -> Scalar:
    return scalar_from_ratio(n, 1, mode)


def parse_scalar(text: str, mode: str = EXACT) -> Scalar:
    """Parse "p", "p/q" or a decimal literal into a scalar of the given mode."""
    text = text.strip()
    try:
        value = Fraction(text)
    except ZeroDivisionError:
        raise ZeroDenominator(f"scalar {text!r} has a zero denominator")
    except ValueError as exc:
        raise InvalidParameter(f"cannot parse scalar {text!r}: {exc}")
    if mode == EXACT:
        return value
    if mode == FLOAT:
        return float(value)
    raise InvalidParameter(f"unknown scalar mode {mode!r}")


def format_scalar(x: Scalar) -> str:
    """Canonical text form: "p/q" (or "p") when exact, shortest repr for floats."""
    if is_exact(x):
        return str(Fraction(x))
    return repr(float(x))


def approx_equal(x: Scalar, y: Scalar, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Equality test that respects the mode of its arguments.

    Exact pairs compare exactly (tol ignored).  As soon as a float is
    involved the test is |x - y| <= abs + rel * max(|x|, |y|).
    """
    if is_exact(x) and is_exact(y):
        return x == y
    fx, fy = float(x), float(y)
    return abs(fx - fy) <= tol.abs + tol.rel * max(abs(fx), abs(fy))
