"""Partial Bell polynomials evaluated exactly on numeric sequences.

``B(n, k)`` of a sequence x_1, x_2, ... is computed with the standard
binomial recurrence

    B(n, k) = sum_{j>=1} C(n-1, j-1) * x_j * B(n-j, k-1),

which is polynomial-time; the defining sum over the partition index set
pi(n, k) is kept as :func:`bell_oracle`, an independent reference used by
the test-suite only (it is exponential and refuses n > 14).

Inputs beyond the end of the given sequence count as zero, which is the
right convention for the coefficient sequences of polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .bigmath import binom, falling
from .errors import DomainError

ORACLE_LIMIT = 14


class OracleTooLarge(DomainError):
    """The enumeration oracle was asked for an n beyond its guard."""


class BellTable:
    """Memo of B(n, k) for all 0 <= k <= n <= n_max on a fixed sequence.

    Built once, then read-only; the whole triangle costs O(n_max^2 * L)
    exact multiplications where L = len(xs).
    """

    def __init__(self, xs, n_max: int):
        self.xs = tuple(Fraction(x) for x in xs)
        self.n_max = n_max
        zero = Fraction(0)
        rows = [[zero] * (n + 1) for n in range(n_max + 1)]
        rows[0][0] = Fraction(1)
        xs_ = self.xs
        L = len(xs_)
        for n in range(1, n_max + 1):
            row = rows[n]
            for k in range(1, n + 1):
                acc = Fraction(0)
                # x_j = 0 past the end of the sequence
                for j in range(1, min(n - k + 1, L) + 1):
                    x = xs_[j - 1]
                    if x:
                        acc += binom(n - 1, j - 1) * x * rows[n - j][k - 1]
                row[k] = acc
        self._rows = rows

    def value(self, n: int, k: int) -> Fraction:
        """B(n, k); zero outside 0 <= k <= n by convention."""
        if k < 0 or n < 0 or k > n:
            return Fraction(0)
        if n > self.n_max:
            raise IndexError(f"table built to n_max={self.n_max}, asked for n={n}")
        return self._rows[n][k]


def bell(n: int, k: int, xs) -> Fraction:
    """Exact B(n, k) on the sequence xs (zero-padded past its end)."""
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return BellTable(xs, n).value(n, k)


def _partitions(n, k, jmax):
    """Yield multiplicity vectors (i_1, ..., i_jmax) with sum(i)=k, sum(j*i_j)=n."""
    if n < 0 or k < 0 or n < k or n > k * jmax:
        return
    if jmax == 0:
        yield ()  # n == k == 0 here
        return
    # choose the multiplicity of the largest part jmax, then recurse
    for m in range(min(k, n // jmax), -1, -1):
        for rest in _partitions(n - m * jmax, k - m, jmax - 1):
            yield rest + (m,)


def bell_oracle(n: int, k: int, xs) -> Fraction:
    """B(n, k) by direct summation over the partition index set.

    Reference implementation: enumerates every sequence (i_1, i_2, ...)
    with i_1 + i_2 + ... = k and i_1 + 2 i_2 + 3 i_3 + ... = n.  Guarded
    at n <= 14 because the enumeration is exponential.
    """
    if n > ORACLE_LIMIT:
        raise OracleTooLarge(f"oracle limited to n <= {ORACLE_LIMIT}, got {n}")
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    xs = tuple(Fraction(x) for x in xs)
    total = Fraction(0)
    nfact = math.factorial(n)
    for i in _partitions(n, k, n):
        term = Fraction(nfact)
        ok = True
        for j, mult in enumerate(i, start=1):
            if mult == 0:
                continue
            x = xs[j - 1] if j <= len(xs) else Fraction(0)
            if x == 0:
                ok = False
                break
            term *= (x / math.factorial(j)) ** mult
            term /= math.factorial(mult)
        if ok:
            total += term
    return total


def bell_falling(n: int, k: int, a) -> Fraction:
    """B(n, k) on the falling-factorial sequence (a)_1, (a)_2, ...

    Uses the closed form (1/k!) * sum_j (-1)^(k-j) C(k, j) (j*a)_n, which
    the test-suite checks against the recurrence on the explicit sequence.
    """
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(k + 1):
        acc += (-1) ** (k - j) * binom(k, j) * Fraction(falling(Fraction(j) * a, n))
    return acc / math.factorial(k)
