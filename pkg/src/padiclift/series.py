"""Truncated formal power series over Q, and series solutions of f(x) = 0.

The :class:`Series` type is dense with exact Fraction coefficients and an
explicit truncation order: a series of order M is known modulo x**(M+1).
Binary operations truncate to the smaller order.

On top of the ring operations sit the three series engines used by the
lifting and factorization code:

* :func:`lagrange_invert` - coefficients of the compositional inverse of
  phi(t) = t*(1 + sum alpha_r t^r / r!), as Bell-polynomial sums;
* :func:`formal_root_terms` / :func:`formal_root_terms_alt` - the term
  stream of the formal root of a_0 + a_1 x + a_2 x^2 + ... when a_1 is
  invertible, in two algebraically-equal forms (kept separate so each can
  cross-check the other);
* :func:`trinomial_root_terms` - the sparse specialization for
  x^m + p*x = q, whose m = 5 case is Eisenstein's classical series.

"Formal root" is made literally testable by :func:`formal_root_series`,
which treats the constant term as an indeterminate t and returns the root
as a Series in t; plugging it back into f must give 0 mod t**(M+1).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .bell import BellTable
from .bigmath import binom
from .errors import DomainError


class CompositionNeedsZeroConstant(DomainError):
    """compose(f, g) requires g(0) = 0."""


class NotInvertible(DomainError):
    """reciprocal(f) requires f(0) != 0."""


class LinearCoefficientZero(DomainError):
    """The formal-root construction needs an invertible linear coefficient."""


class DegenerateExponent(DomainError):
    """Trinomial root series needs exponent m > 1."""


class Series:
    """Power series known modulo x**(order+1), coefficients exact Fractions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        elif not cs:
            raise ValueError("empty coefficient list and no order")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other):
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Series({list(self.coeffs)!r})"

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += other
            return Series(cs)
        M = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(M + 1)])

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs])
        M = min(self.order, other.order)
        out = [Fraction(0)] * (M + 1)
        for i, a in enumerate(self.coeffs[: M + 1]):
            if a == 0:
                continue
            for j in range(M + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        out = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def compose(self, g: "Series") -> "Series":
        """self(g(x)) truncated at min(orders); needs g(0) = 0."""
        if g.coeffs[0] != 0:
            raise CompositionNeedsZeroConstant("inner series must have zero constant term")
        M = min(self.order, g.order)
        out = Series.zero(M)
        gk = Series.one(M)
        g = g.truncate(M)
        for k, a in enumerate(self.coeffs[: M + 1]):
            if a:
                out = out + gk * a
            if k < M:
                gk = gk * g
        return out

    def reciprocal(self) -> "Series":
        """Series g with self * g = 1 + O(x**(order+1)); needs f(0) != 0."""
        f0 = self.coeffs[0]
        if f0 == 0:
            raise NotInvertible("constant term is zero")
        M = self.order
        out = [Fraction(0)] * (M + 1)
        out[0] = 1 / f0
        for n in range(1, M + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += self.coeffs[i] * out[n - i]
            out[n] = -acc / f0
        return Series(out)

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series.zero(0)
        return Series([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x) -> Fraction:
        """Partial-sum value at a concrete rational point (no convergence claims)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


# ---------------------------------------------------------------------------
# Lagrange inversion
# ---------------------------------------------------------------------------


def lagrange_invert(alphas) -> list[Fraction]:
    """Inverse-series coefficients beta_n for phi(t) = t(1 + sum alpha_r t^r/r!).

    beta_n = sum_{j=1..n} (-1)^j (n+j)!/(n+1)! B(n, j)(alpha_1, alpha_2, ...),
    returned for n = 1..len(alphas); then
    phi^{-1}(u) = u(1 + sum beta_n u^n / n!).
    """
    alphas = [Fraction(a) for a in alphas]
    M = len(alphas)
    table = BellTable(alphas, M)
    betas = []
    for n in range(1, M + 1):
        acc = Fraction(0)
        fac = math.factorial(n + 1)
        for j in range(1, n + 1):
            acc += (-1) ** j * Fraction(math.factorial(n + j), fac) * table.value(n, j)
        betas.append(acc)
    return betas


def series_from_alphas(alphas, order: int | None = None) -> Series:
    """Rebuild phi(t) = t(1 + sum alpha_r t^r / r!) as a Series."""
    alphas = list(alphas)
    if order is None:
        order = len(alphas) + 1
    cs = [Fraction(0), Fraction(1)]
    for r, a in enumerate(alphas, start=1):
        cs.append(Fraction(a) / math.factorial(r))
    return Series(cs, order)


class InversionProblem:
    """An alpha-sequence together with its computed inverse betas.

    Bundles the two coefficient streams of a compositional-inverse pair
    and can rebuild either side as a truncated Series for the round-trip
    check phi_inverse(phi(t)) = t + O(t^(M+2)).
    """

    def __init__(self, alphas):
        self.alphas = tuple(Fraction(a) for a in alphas)
        self.betas = tuple(lagrange_invert(self.alphas))

    def phi(self, order: int | None = None) -> Series:
        return series_from_alphas(self.alphas, order)

    def phi_inverse(self, order: int | None = None) -> Series:
        if order is None:
            order = len(self.betas) + 1
        cs = [Fraction(0), Fraction(1)]
        cs += [b / math.factorial(n) for n, b in enumerate(self.betas, start=1)]
        return Series(cs, order)

    def roundtrip_is_identity(self) -> bool:
        M = len(self.alphas) + 1
        ident = Series.x(M)
        return (self.phi_inverse(M).compose(self.phi(M)) == ident
                and self.phi(M).compose(self.phi_inverse(M)) == ident)


# ---------------------------------------------------------------------------
# Formal roots of f(x) = a0 + a1 x + ... (a1 invertible)
# ---------------------------------------------------------------------------


def _bell_args_shift0(a):
    """x_j = j! a_j for j = 1, 2, ... from the coefficient list a (a[0] unused)."""
    return [math.factorial(j) * Fraction(a[j]) for j in range(1, len(a))]


def formal_root_brackets(a, n_max: int) -> list[Fraction]:
    """Bracket_n of the formal root, for n = 0..n_max.

    The root is sum_n bracket_n * (a0/a1)^(n+1);

    bracket_n = sum_{k=0..n} (-1)^(n-k+1) / (a1^k (n+1)!) * C(2n+1, n-k)
                * B(n+k, k)(1! a1, 2! a2, ...).

    Only a[1:] enters the brackets; a[0] only scales the terms.
    """
    a = [Fraction(c) for c in a]
    if len(a) < 2 or a[1] == 0:
        raise LinearCoefficientZero("need a nonzero linear coefficient a1")
    a1 = a[1]
    table = BellTable(_bell_args_shift0(a), 2 * n_max)
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        fac = math.factorial(n + 1)
        for k in range(n + 1):
            b = table.value(n + k, k)
            if b:
                acc += (-1) ** (n - k + 1) * binom(2 * n + 1, n - k) * b / (a1 ** k * fac)
        out.append(acc)
    return out


def formal_root_brackets_alt(a, n_max: int) -> list[Fraction]:
    """Same brackets via the intermediate (pre-regrouping) form.

    bracket_n = sum_{j=0..n} (-1)^(n+j+1) / (a1^j n!) * (n+j)!/(n+1)!
                * B(n, j)(1! a2, 2! a3, ...).

    Algebraically equal to :func:`formal_root_brackets`; kept as an
    independent cross-check of the regrouping identity.
    """
    a = [Fraction(c) for c in a]
    if len(a) < 2 or a[1] == 0:
        raise LinearCoefficientZero("need a nonzero linear coefficient a1")
    a1 = a[1]
    shifted = [math.factorial(j) * Fraction(a[j + 1]) for j in range(1, len(a) - 1)]
    table = BellTable(shifted, n_max)
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        nfac = math.factorial(n)
        np1fac = math.factorial(n + 1)
        for j in range(n + 1):
            b = table.value(n, j)
            if b:
                acc += ((-1) ** (n + j + 1) * Fraction(math.factorial(n + j))
                        / (a1 ** j * nfac * np1fac) * b)
        out.append(acc)
    return out


def formal_root_terms(a, n_max: int, alt: bool = False) -> list[tuple[Fraction, Fraction]]:
    """Per-n (bracket, term) pairs of the formal root of f(x) = 0.

    term_n = bracket_n * (a0/a1)^(n+1); the partial sums converge to the
    root whenever the ambient topology makes the terms small (e.g. p-adic
    with vp(a0) >= 1).
    """
    a = [Fraction(c) for c in a]
    brackets = (formal_root_brackets_alt if alt else formal_root_brackets)(a, n_max)
    ratio = a[0] / a[1]
    return [(br, br * ratio ** (n + 1)) for n, br in enumerate(brackets)]


def formal_root_series(a, n_terms: int) -> Series:
    """The formal root as a Series in an indeterminate t standing for a0.

    Coefficient of t^(n+1) is bracket_n / a1^(n+1), for n < n_terms.  The
    defining property -- substitute into t + a1 x + a2 x^2 + ... and get
    0 mod t^(n_terms+1) -- is what the tests assert.
    """
    brackets = formal_root_brackets(a, n_terms - 1)
    a1 = Fraction(a[1])
    cs = [Fraction(0)] * (n_terms + 1)
    for n, br in enumerate(brackets):
        cs[n + 1] = br / a1 ** (n + 1)
    return Series(cs)


def apply_poly_with_indeterminate_constant(a, root: Series) -> Series:
    """Evaluate t + a1*x + a2*x^2 + ... at x = root(t), as a Series in t."""
    M = root.order
    out = Series.x(M)  # the constant term a0 = t
    xk = Series.one(M)
    for j in range(1, len(a)):
        xk = xk * root
        if a[j]:
            out = out + xk * Fraction(a[j])
    return out


def trinomial_root_terms(m: int, pcoef, k_max: int, q=None):
    """Terms of the series root of x^m + p*x = q.

    With q=None the k-th entry is (exponent, coefficient) with the term
    understood as coefficient * q**exponent, where

        exponent = (m-1)k + 1,
        coefficient = (-1)^k C(mk, k) / (((m-1)k + 1) * p^(mk+1)).

    With a concrete rational q the evaluated term values are returned.
    The m = 5, p = 1 case is Eisenstein's series for x^5 + x = q.
    """
    if m <= 1:
        raise DegenerateExponent(f"need m > 1, got {m}")
    pcoef = Fraction(pcoef)
    if pcoef == 0:
        raise LinearCoefficientZero("trinomial needs p != 0")
    out = []
    for k in range(k_max + 1):
        e = (m - 1) * k + 1
        coeff = Fraction((-1) ** k * binom(m * k, k), e) / pcoef ** (m * k + 1)
        if q is None:
            out.append((e, coeff))
        else:
            out.append(coeff * Fraction(q) ** e)
    return out
