"""Exact rational scalars and the factorial combinatorics built on them.

``ExactRational`` is :class:`fractions.Fraction`: it is already kept in
lowest terms with a positive denominator, and zero is stored as ``0/1``.
"""

from fractions import Fraction
import math

__all__ = [
    "ExactRational",
    "ExactDivisionError",
    "as_exact",
    "add",
    "sub",
    "mul",
    "div",
    "factorial",
    "rising_factorial",
    "render",
]

ExactRational = Fraction


class ExactDivisionError(ZeroDivisionError):
    """Raised when an exact division has a zero divisor."""


def as_exact(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational.

    Floats are refused; they would smuggle rounding error into the core.
    """
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def add(a, b) -> Fraction:
    return as_exact(a) + as_exact(b)


def sub(a, b) -> Fraction:
    return as_exact(a) - as_exact(b)


def mul(a, b) -> Fraction:
    return as_exact(a) * as_exact(b)


def div(a, b) -> Fraction:
    b = as_exact(b)
    if b == 0:
        raise ExactDivisionError(f"division of {render(as_exact(a))} by zero")
    return as_exact(a) / b


def factorial(a: int) -> Fraction:
    if a < 0:
        raise ValueError(f"factorial needs a non-negative integer, got {a}")
    return Fraction(math.factorial(a))


def rising_factorial(y, m: int) -> Fraction:
    """Pochhammer symbol ``(y)_m = y (y+1) ... (y+m-1)``; ``(y)_0 = 1``."""
    if m < 0:
        raise ValueError(f"rising factorial needs m >= 0, got {m}")
    y = as_exact(y)
    result = Fraction(1)
    for i in range(m):
        result *= y + i
    return result


def render(q: Fraction) -> str:
    """Canonical text: ``p`` for integers, else ``p/q`` with the sign on ``p``."""
    q = as_exact(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
