"""Exact rational arithmetic helpers: canonical fractions, factorials,
binomials, and Beta values at integer arguments.

Everything here is arbitrary precision and nothing ever rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["Rational", "rational", "factorial", "binomial", "beta_integer"]

# fractions.Fraction already enforces the canonical-form invariants we
# rely on everywhere (gcd-reduced, denominator > 0, zero stored as 0/1),
# so it is the Rational type of this package.
Rational = Fraction


def rational(num: int, den: int = 1) -> Rational:
    """Canonical reduced fraction num/den.

    Raises ZeroDivisionError for den == 0.
    """
    return Fraction(num, den)


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), defined as 0 outside 0 <= k <= n.

    The zero convention lets double sums over (k, l) run over full
    rectangles without boundary special cases.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def beta_integer(a: int, b: int) -> Rational:
    """Beta(a, b) = (a-1)! (b-1)! / (a+b-1)! for integers a, b >= 1.

    This is the exact value of the half-line integral of
    t^(a-1) / (1+t)^(a+b); it is symmetric in its arguments.
    """
    if a < 1 or b < 1:
        raise ValueError(f"beta_integer requires positive integer arguments, got ({a}, {b})")
    return Fraction(
        math.factorial(a - 1) * math.factorial(b - 1),
        math.factorial(a + b - 1),
    )
