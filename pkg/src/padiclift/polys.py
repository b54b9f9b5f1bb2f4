"""Dense univariate polynomial helpers, coefficients ascending (constant first).

Coefficients may be ints or Fractions; everything is exact.  Only what the
lifting and factorization code needs: evaluation, derivatives, Taylor
shifts, products, exact division, and a primitive gcd over Z[x].
"""

from __future__ import annotations

import math
from fractions import Fraction


def degree(f) -> int:
    """Index of the last nonzero coefficient; -1 for the zero polynomial."""
    for i in range(len(f) - 1, -1, -1):
        if f[i] != 0:
            return i
    return -1


def trim(f) -> list:
    d = degree(f)
    return list(f[: d + 1]) if d >= 0 else [0]


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f) -> list:
    if len(f) <= 1:
        return [0]
    return [i * c for i, c in enumerate(f)][1:]


def taylor_coeffs(f, r0) -> list:
    """Coefficients c_j of f(r0 + x), i.e. c_j = f^(j)(r0) / j!, exactly.

    Repeated-Horner shift; integer inputs give integer outputs.
    """
    cs = list(f)
    n = len(cs)
    for j in range(n - 1):
        for i in range(n - 2, j - 1, -1):
            cs[i] += cs[i + 1] * r0
    return cs


def mul(f, g) -> list:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] += a * b
    return out


def add(f, g) -> list:
    n = max(len(f), len(g))
    return [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)]


def divmod_exact(f, g) -> tuple[list, list]:
    """Quotient and remainder over Q (exact Fractions)."""
    f = [Fraction(c) for c in trim(f)]
    g = [Fraction(c) for c in trim(g)]
    dg = degree(g)
    if dg < 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(f) - dg, 1)
    r = f
    lead = g[dg]
    while degree(r) >= dg:
        dr = degree(r)
        c = r[dr] / lead
        q[dr - dg] = c
        for i in range(dg + 1):
            r[dr - dg + i] -= c * g[i]
    return trim(q), trim(r)


def content(f) -> int:
    """gcd of the integer coefficients (positive), 0 for the zero polynomial."""
    g = 0
    for c in f:
        g = math.gcd(g, c)
    return g


def primitive_int(f) -> list:
    """Scale a rational polynomial to a primitive integer one, leading coeff > 0."""
    f = trim(f)
    den = 1
    for c in f:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    zf = [int(Fraction(c) * den) for c in f]
    c = content(zf)
    if c:
        zf = [a // c for a in zf]
    if zf[degree(zf)] < 0:
        zf = [-a for a in zf]
    return zf


def gcd_primitive(f, g) -> list:
    """Primitive integer gcd of two integer polynomials (monic-free Euclid over Q)."""
    a = [Fraction(c) for c in trim(f)]
    b = [Fraction(c) for c in trim(g)]
    while degree(b) >= 0 and any(c != 0 for c in b):
        a, b = b, divmod_exact(a, b)[1]
    return primitive_int(a)
