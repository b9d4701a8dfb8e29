"""Stirling numbers of the second kind and Bell numbers.

Conventions: S(0, 0) = 1 (the empty set has exactly one partition into
zero blocks) and S(n, k) = 0 outside 0 <= k <= n.  The memoized triangle
built from the recurrence

    S(n, k) = k * S(n-1, k) + S(n-1, k-1)

is the workhorse; a brute-force set-partition counter and the Bell
triangle provide two independent cross-checks.
"""

from __future__ import annotations

import threading
from functools import lru_cache

__all__ = [
    "BRUTE_FORCE_MAX_N",
    "StirlingTriangle",
    "stirling2",
    "stirling2_row",
    "stirling2_bruteforce",
    "bell",
]

# Bell(12) = 4,213,597 partitions; exhaustive enumeration beyond this
# stops being a few-seconds affair.
BRUTE_FORCE_MAX_N = 12


class StirlingTriangle:
    """Memoized triangle of S(n, k) values, grown row by row.

    Rows are appended under an internal lock, so one shared instance can
    be extended from several threads; a row, once computed, is never
    mutated, and reads of completed rows are plain list indexing.
    """

    def __init__(self, max_n: int = 0):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()
        if max_n > 0:
            self.extend_to(max_n)

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def extend_to(self, n: int) -> None:
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(self._rows)
                row = [0] * (m + 1)
                for k in range(1, m):
                    row[k] = k * prev[k] + prev[k - 1]
                row[m] = 1
                self._rows.append(row)

    def value(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError(f"Stirling numbers need n >= 0, got n={n}")
        if k < 0 or k > n:
            return 0
        self.extend_to(n)
        return self._rows[n][k]

    def row(self, n: int) -> list[int]:
        """[S(n, 0), ..., S(n, n)] as a fresh list."""
        if n < 0:
            raise ValueError(f"Stirling numbers need n >= 0, got n={n}")
        self.extend_to(n)
        return list(self._rows[n])


_SHARED = StirlingTriangle()


def stirling2(n: int, k: int) -> int:
    """S(n, k) from the shared memoized triangle."""
    return _SHARED.value(n, k)


def stirling2_row(n: int) -> list[int]:
    """Row n of the shared triangle: [S(n, 0), ..., S(n, n)]."""
    return _SHARED.row(n)


def stirling2_bruteforce(n: int, k: int) -> int:
    """S(n, k) by exhaustively enumerating set partitions of {1..n}.

    Partitions are walked as restricted growth strings and tallied by
    block count; the full tally for a given n is cached so asking for
    every k costs one enumeration.  Refuses n > BRUTE_FORCE_MAX_N.
    """
    if n < 0:
        raise ValueError(f"Stirling numbers need n >= 0, got n={n}")
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute-force enumeration is capped at n <= {BRUTE_FORCE_MAX_N}, got n={n}"
        )
    if k < 0 or k > n:
        return 0
    return _block_counts(n)[k]


@lru_cache(maxsize=None)
def _block_counts(n: int) -> tuple[int, ...]:
    """counts[k] = number of partitions of an n-set into exactly k blocks,
    found by visiting every restricted growth string of length n."""
    if n == 0:
        return (1,)
    counts = [0] * (n + 1)
    a = [0] * n          # a[i]: block index of element i; a[0] stays 0
    b = [1] * n          # b[i] = 1 + max(a[:i]) for i >= 1
    last = n - 1
    while True:
        ai, bi = a[last], b[last]
        counts[bi if ai < bi else ai + 1] += 1
        j = last
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            break
        aj = a[j] + 1
        a[j] = aj
        nb = b[j] + 1 if aj == b[j] else b[j]
        for i in range(j + 1, n):
            a[i] = 0
            b[i] = nb
    return tuple(counts)


def bell(n: int) -> int:
    """Bell number: the count of all set partitions of an n-set.

    Computed with the Bell-triangle recurrence, deliberately independent
    of the Stirling table; agreement with the row sums of stirling2 is a
    test invariant, not an implementation shortcut.
    """
    if n < 0:
        raise ValueError(f"Bell numbers need n >= 0, got n={n}")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]
