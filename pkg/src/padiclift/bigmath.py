"""Exact integer/rational arithmetic helpers and p-adic valuations.

Integers are plain Python ``int`` (arbitrary precision), rationals are
``fractions.Fraction`` (always stored reduced with positive denominator),
so canonical form comes for free.  What this module adds is the valuation
layer: ``vp`` and friends, with an explicit ``INFINITY`` object for the
valuation of zero.
"""

from __future__ import annotations

import math
from fractions import Fraction


class _Infinity:
    """The valuation of 0.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("padiclift.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INFINITY - INFINITY is undefined")
        return self

    def __neg__(self):
        raise ArithmeticError("valuations are never -INFINITY here")


INFINITY = _Infinity()


def vp(a: int, p: int) -> int | _Infinity:
    """p-adic valuation of an integer: the largest e with p**e | a.

    ``vp(0, p)`` is ``INFINITY``.  The sign of ``a`` is ignored.
    """
    if a == 0:
        return INFINITY
    a = abs(a)
    v = 0
    # strip large blocks first to keep the loop short on huge inputs
    pk = p * p * p * p
    while a % pk == 0:
        a //= pk
        v += 4
    while a % p == 0:
        a //= p
        v += 1
    return v


def vp_rat(x: Fraction | int, p: int) -> int | _Infinity:
    """p-adic valuation of a rational, vp(num) - vp(den).

    Computed on the reduced form, so the result does not depend on how the
    fraction was written.  May be negative; ``vp_rat(0, p)`` is INFINITY.
    """
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return vp(x.numerator, p) - vp(x.denominator, p)


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n >= 0."""
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def vp_factorial(n: int, p: int) -> int:
    """vp(n!) via the digit-sum form of Legendre's formula.

    Equals (n - digit_sum_base_p(n)) / (p - 1), which is always an exact
    integer.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (n - digit_sum(n, p)) // (p - 1)


def falling(a, n: int):
    """Falling factorial (a)_n = a(a-1)...(a-n+1), with (a)_0 = 1.

    Works for integer or Fraction ``a``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = a ** 0  # 1 in the right type
    for i in range(n):
        out *= a - i
    return out


def binom(n: int, k: int) -> int:
    """Binomial coefficient with integer (possibly negative) upper index.

    falling(n, k) / k!, always an exact integer; 0 when 0 <= n < k.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if 0 <= n:
        if k > n:
            return 0
        return math.comb(n, k)
    num = falling(n, k)
    return num // math.factorial(k)


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3 * 10**24.

    The moduli this library takes as primes fit in a machine word, far
    below that bound.
    """
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << (n.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y
