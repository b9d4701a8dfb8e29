"""Bernoulli numbers by three exact strategies, plus zeta values at
non-positive integers.

Convention: the generating function t/(e^t - 1) fixes B_1 = -1/2.  (The
"+1/2" convention belongs to t/(1 - e^-t) and is not used anywhere in
this package.)

The recurrence is the designated ground truth; the two Stirling-sum
strategies are the ones under test and must agree with it everywhere.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinatorics import stirling2_row

__all__ = [
    "Recurrence",
    "StirlingSum",
    "Split",
    "BernoulliMethod",
    "BernoulliTable",
    "bernoulli",
    "bernoulli_recurrence",
    "bernoulli_stirling_sum",
    "bernoulli_split",
    "zeta_nonpositive",
]


@dataclass(frozen=True)
class Recurrence:
    """Generating-function recurrence (ground truth)."""


@dataclass(frozen=True)
class StirlingSum:
    """Single alternating sum over one Stirling row."""


@dataclass(frozen=True)
class Split:
    """Double sum over Stirling rows m and n; evaluates B_(m+n)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError(f"split indices must be non-negative, got ({self.m}, {self.n})")


BernoulliMethod = Recurrence | StirlingSum | Split


class BernoulliTable:
    """Memoized B_0..B_max from the recurrence

        B_0 = 1,   B_m = -(1/(m+1)) * sum_{j<m} C(m+1, j) B_j,

    which is what multiplying t/(e^t - 1) = sum B_j t^j / j! through by
    (e^t - 1) forces.  Extension happens under a lock; entries, once
    stored, never change, so a shared instance may be read from any
    thread.
    """

    def __init__(self, max_n: int = 0):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()
        if max_n > 0:
            self.extend_to(max_n)

    @property
    def max_n(self) -> int:
        return len(self._values) - 1

    def extend_to(self, n: int) -> None:
        with self._lock:
            while len(self._values) <= n:
                m = len(self._values)
                acc = sum(comb(m + 1, j) * self._values[j] for j in range(m))
                self._values.append(-acc / (m + 1))

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be non-negative, got {n}")
        self.extend_to(n)
        return self._values[n]


_SHARED_TABLE = BernoulliTable()


def bernoulli_recurrence(n: int) -> Fraction:
    """Exact B_n from the shared recurrence table."""
    return _SHARED_TABLE.value(n)


def bernoulli_stirling_sum(n: int) -> Fraction:
    """Exact B_n as the single alternating Stirling sum

        B_n = sum_{k=0}^{n} (-1)^k k! S(n, k) / (k + 1).
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    total = Fraction(0)
    sign = 1
    kfact = 1
    for k, s in enumerate(stirling2_row(n)):
        if k:
            kfact *= k
        if s:
            total += Fraction(sign * kfact * s, k + 1)
        sign = -sign
    return total


def bernoulli_split(m: int, n: int) -> Fraction:
    """Exact B_(m+n) as the double sum

        sum_{k<=n} sum_{l<=m} (-1)^(k+l) k! l! S(n,k) S(m,l)
                              / ((k+l+1) * C(k+l, l)).

    Each term's denominator is evaluated in the equivalent factorial form
    k! l! / (k+l+1)!, so the sum sits over the common denominator
    (m+n+1)! and accumulates in pure integer arithmetic; one Fraction is
    built at the end.
    """
    if m < 0 or n < 0:
        raise ValueError(f"split indices must be non-negative, got ({m}, {n})")
    fact = [1] * (m + n + 2)
    for i in range(1, m + n + 2):
        fact[i] = fact[i - 1] * i
    den = fact[m + n + 1]
    scale = [den // fact[j + 1] for j in range(m + n + 1)]  # (m+n+1)!/(j+1)!
    # term = (-1)^(k+l) * (k!)^2 S(n,k) * (l!)^2 S(m,l) * scale[k+l] / den
    a = [(-1) ** k * fact[k] * fact[k] * s for k, s in enumerate(stirling2_row(n))]
    b = [(-1) ** l * fact[l] * fact[l] * s for l, s in enumerate(stirling2_row(m))]
    acc = 0
    for k, ak in enumerate(a):
        if not ak:
            continue
        for l, bl in enumerate(b):
            if bl:
                acc += ak * bl * scale[k + l]
    return Fraction(acc, den)


def bernoulli(n: int, method: BernoulliMethod = Recurrence()) -> Fraction:
    """B_n by the chosen strategy.

    A Split(m', n') method must satisfy m' + n' == n; anything else is
    rejected rather than silently recomputed.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {n}")
    match method:
        case Recurrence():
            return bernoulli_recurrence(n)
        case StirlingSum():
            return bernoulli_stirling_sum(n)
        case Split(m=m, n=k):
            if m + k != n:
                raise ValueError(f"split pair ({m}, {k}) does not sum to {n}")
            return bernoulli_split(m, k)
        case _:
            raise TypeError(f"unknown Bernoulli method: {method!r}")


def zeta_nonpositive(s: int) -> Fraction:
    """Exact zeta(s) for integer s <= 0.

    zeta(0) = -1/2 is pinned directly; for s <= -1 the value is
    -B_N / N with N = 1 - s, which lands on 0 at every even negative
    argument (the trivial zeros).
    """
    if s > 0:
        raise ValueError(f"zeta_nonpositive requires s <= 0, got {s}")
    if s == 0:
        return Fraction(-1, 2)
    n = 1 - s
    return -bernoulli_recurrence(n) / n
