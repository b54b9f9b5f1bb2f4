"""Reducibility classification and explicit factorization over Z[[x]].

Targets f(x) = p^w + p^m g1 x + g2 x^2 + ... (w >= 2, m >= 1, gcd(p, g1)
= 1), the one shape whose reducibility is not settled by the constant
term alone.  Given a root r in p*Z_p with vp(r) = ell <= m, written as
r = p^ell (1 + sum e_j p^(ell j)), the factorization is

    f = (p^ell - x - x sum a_n x^n)
        (p^(w-ell) + (p^(w-2 ell) + p^(m-ell) g1) x + x sum b_n x^n)

where the a_n come from inverting x*E(x) (E the digit series), the b_n
are quotients b_n = bhat_n / p^(ell n) of an explicit t-convolution, and
the divisibility p^(ell n) | bhat_n is a theorem that the code asserts
on every coefficient it produces.

Inputs may be polynomials or power series with an eventually-geometric
tail; the geometric closed form lets the root scan evaluate f exactly,
which is what finds exact small roots (where naive truncation would show
a spuriously vanishing derivative and give up).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import polys
from .bell import BellTable
from .bigmath import INFINITY, iroot, is_prime, vp, vp_rat
from .errors import DomainError
from .hensel import EvenPrime, LiftReport, lift_general
from .padic import PadicInt
from .series import Series


class WrongShape(DomainError):
    """Input is not of the p^w + p^m*g1*x + ... factorization shape."""


class WrongValuation(DomainError):
    """Root valuation does not match the requested ell."""


class UnitPartNotOne(DomainError):
    """Root unit part != 1 mod p^ell: rescale per the e0 remark first."""


class InsufficientPrecision(DomainError):
    """Root known to too few digits for the requested order."""


class IntegralityViolation(DomainError):
    """A provably-integer coefficient came out non-integral."""


class DivisibilityViolation(DomainError):
    """p^(ell n) failed to divide bhat_n."""


class PrecisionExhausted(DomainError):
    """An internal congruence check failed at the working precision."""


class NoMultipleRoot(DomainError):
    """gcd(f, f') is constant: no multiple root to split off."""


class NoSuitableRoot(DomainError):
    """No root with vp(r) = ell <= m was found.

    ``fallback_out_of_scope`` is True when w > 2m, i.e. the case where a
    factorization may still exist via the (cited, unimplemented)
    fallback algorithm.
    """

    def __init__(self, message, fallback_out_of_scope=False):
        super().__init__(message)
        self.fallback_out_of_scope = fallback_out_of_scope


# ---------------------------------------------------------------------------
# inputs: polynomials and geometric-tail series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesInput:
    """f_0, f_1, ... with either a zero tail (polynomial) or the last head
    coefficient extended geometrically: f_j = head[-1] * ratio^(j-H+1) for
    j >= H = len(head)."""

    head: tuple
    tail_ratio: int | None = None

    @classmethod
    def polynomial(cls, coeffs) -> "SeriesInput":
        return cls(tuple(int(c) for c in coeffs), None)

    @classmethod
    def geometric(cls, coeffs, ratio: int) -> "SeriesInput":
        return cls(tuple(int(c) for c in coeffs), int(ratio))

    @property
    def is_polynomial(self) -> bool:
        return self.tail_ratio is None

    def coeff(self, j: int) -> int:
        if j < len(self.head):
            return self.head[j]
        if self.tail_ratio is None:
            return 0
        return self.head[-1] * self.tail_ratio ** (j - len(self.head) + 1)

    def coeffs_upto(self, J: int) -> list[int]:
        return [self.coeff(j) for j in range(J + 1)]

    def eval_exact(self, c) -> Fraction:
        """f(c) as an exact rational.

        For a geometric tail the sum closes to h*r*c^H/(1 - r*c); that
        rational equals the p-adic sum whenever vp(r*c) >= 1, which holds
        for every scan point (c in p*Z).
        """
        c = Fraction(c)
        acc = Fraction(0)
        for a in reversed(self.head):
            acc = acc * c + a
        if self.tail_ratio is not None:
            h, r, H = self.head[-1], self.tail_ratio, len(self.head)
            acc += h * r * c ** H / (1 - r * c)
        return acc

    def eval_derivative_exact(self, c) -> Fraction:
        c = Fraction(c)
        acc = Fraction(0)
        for j in range(len(self.head) - 1, 0, -1):
            acc = acc * c + j * self.head[j]
        if self.tail_ratio is not None:
            # d/dx [ h r x^H / (1 - r x) ]
            h, r, H = self.head[-1], self.tail_ratio, len(self.head)
            acc += h * r * (H * c ** (H - 1) * (1 - r * c) + r * c ** H) / (1 - r * c) ** 2
        return acc

    def rescaled(self, scale: int) -> "SeriesInput":
        """The input for g(x) = f(scale * x)."""
        head = tuple(a * scale ** j for j, a in enumerate(self.head))
        ratio = None if self.tail_ratio is None else self.tail_ratio * scale
        return SeriesInput(head, ratio)


def _as_input(f) -> SeriesInput:
    return f if isinstance(f, SeriesInput) else SeriesInput.polynomial(f)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

UNIT = "Unit"
IRREDUCIBLE_PRIME = "IrreduciblePrime"
IRREDUCIBLE_PRIME_POWER_UNIT_LINEAR = "IrreduciblePrimePowerUnitLinear"
REDUCIBLE_COMPOSITE = "ReducibleComposite"
NEEDS_ROOT_ANALYSIS = "NeedsRootAnalysis"


@dataclass(frozen=True)
class Classification:
    kind: str
    p: int | None = None
    w: int | None = None
    m: object = None  # int or INFINITY (f1 = 0)

    def __str__(self):
        if self.kind == NEEDS_ROOT_ANALYSIS:
            return f"{self.kind} p={self.p} w={self.w} m={self.m}"
        return self.kind


def _prime_power(n: int):
    """(p, w) with n = p**w, or None."""
    if n < 2:
        return None
    for w in range(n.bit_length(), 0, -1):
        p = iroot(n, w)
        for cand in (p, p + 1):
            if cand ** w == n and is_prime(cand):
                return cand, w
    return None


def classify(f0: int, f1: int) -> Classification:
    """Reducibility case analysis on the two lowest coefficients.

    Units and series with prime |f0| are irreducible; prime-power |f0|
    with gcd(p, f1) = 1 likewise; composite (non-prime-power) f0 means
    reducible.  The remaining case carries its (p, w, m) on to the root
    analysis.
    """
    a = abs(f0)
    if a == 1:
        return Classification(UNIT)
    pw = _prime_power(a)
    if pw is None:
        return Classification(REDUCIBLE_COMPOSITE)
    p, w = pw
    if w == 1:
        return Classification(IRREDUCIBLE_PRIME, p=p, w=1)
    if f1 % p != 0:
        return Classification(IRREDUCIBLE_PRIME_POWER_UNIT_LINEAR, p=p, w=w)
    return Classification(NEEDS_ROOT_ANALYSIS, p=p, w=w, m=vp(f1, p))


# ---------------------------------------------------------------------------
# digits, coefficient streams, T-series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootDigits:
    """Root written as p^ell (1 + sum_j e_j p^(ell j)), 0 <= e_j < p^ell."""

    p: int
    ell: int
    digits: tuple

    def bell_args(self) -> list:
        return [math.factorial(j) * e for j, e in enumerate(self.digits, start=1)]

    def reconstruct(self, precision: int) -> int:
        blk = self.p ** self.ell
        u = 0
        for e in reversed(self.digits):
            u = u * blk + e
        u = 1 + blk * u
        return self.p ** self.ell * u % self.p ** precision


def root_to_digits(r: PadicInt, ell: int, M: int) -> RootDigits:
    """Base-p^ell digits e_1..e_M of the unit part of r (which must be
    1 mod p^ell; otherwise the caller has to rescale first)."""
    if r.precision < ell * (M + 3):
        raise InsufficientPrecision(
            f"root precision {r.precision} < ell*(M+3) = {ell * (M + 3)}"
        )
    if r.valuation() != ell:
        raise WrongValuation(f"vp(root) = {r.valuation()}, expected {ell}")
    p = r.p
    u = r.residue // p ** ell
    blk = p ** ell
    if u % blk != 1:
        raise UnitPartNotOne(f"unit part = {u % blk} mod p^ell, expected 1")
    w = (u - 1) // blk
    es = []
    for _ in range(M):
        w, e = divmod(w, blk)
        es.append(e)
    return RootDigits(p, ell, tuple(es))


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise IntegralityViolation(f"{what} = {x} is not an integer")
    return x.numerator


def a_coeffs(e: RootDigits, M: int) -> list[int]:
    """a_n = (1/n!) sum_k (-1)^k (n+k)!/(n+1)! B(n,k)(1! e_1, 2! e_2, ...),
    n = 1..M; these are the coefficients of the compositional inverse of
    x*E(x) and are provably integers."""
    table = BellTable(e.bell_args(), M)
    out = []
    for n in range(1, M + 1):
        acc = Fraction(0)
        nfac = math.factorial(n)
        np1fac = math.factorial(n + 1)
        for k in range(1, n + 1):
            b = table.value(n, k)
            if b:
                acc += (-1) ** k * Fraction(math.factorial(n + k)) / np1fac * b
        out.append(_as_int(acc / nfac, f"a_{n}"))
    return out


def t_coeffs(e: RootDigits, M: int) -> list[int]:
    """Reciprocal coefficients t_n of Ahat = 1 - x - x sum p^(ell n) a_n x^n:

    t_n = 1 + sum_k p^(ell k) (n+1-k)/k! sum_j (-1)^j (n+j)!/(n+1)!
          B(k,j)(1! e_1, 2! e_2, ...), integers by the reciprocal lemma.
    """
    table = BellTable(e.bell_args(), M)
    pl = e.p ** e.ell
    out = []
    for n in range(1, M + 1):
        acc = Fraction(1)
        np1fac = math.factorial(n + 1)
        for k in range(1, n + 1):
            inner = Fraction(0)
            for j in range(1, k + 1):
                b = table.value(k, j)
                if b:
                    inner += (-1) ** j * Fraction(math.factorial(n + j)) / np1fac * b
            if inner:
                acc += pl ** k * Fraction(n + 1 - k, math.factorial(k)) * inner
        out.append(_as_int(acc, f"t_{n}"))
    return out


def e_series(e: RootDigits, order: int) -> Series:
    """E(x) = 1 + sum e_j x^j as a truncated series."""
    return Series([1] + list(e.digits), order)


def tn_series(e: RootDigits, n: int, order: int) -> Series:
    """T_n(x), integer coefficients, satisfying T_(n-1) = E * T_n.

    Closed form for n >= 1; for n <= 0 defined by E-multiplication:
    T_n = E^(1-n) * T_1.
    """
    if n >= 1:
        table = BellTable(e.bell_args(), order)
        cs = [Fraction(1)]
        np1fac = math.factorial(n + 1)
        for k in range(1, order + 1):
            inner = Fraction(0)
            for j in range(1, k + 1):
                b = table.value(k, j)
                if b:
                    inner += (-1) ** j * Fraction(math.factorial(n + j)) / np1fac * b
            cs.append(Fraction(n + 1 - k, math.factorial(k)) * inner)
        s = Series(cs, order)
    else:
        E = e_series(e, order)
        s = tn_series(e, 1, order) * E ** (1 - n)
    for c in s.coeffs:
        if c.denominator != 1:
            raise IntegralityViolation(f"T_{n} coefficient {c} not integral")
    return s


@dataclass(frozen=True)
class FactorizationProblem:
    """The (p, w, m, gammas) data of f = p^w + p^m g1 x + g2 x^2 + ...;
    gammas[j-1] = g_j, with enough entries for the requested order."""

    p: int
    w: int
    m: int
    gammas: tuple


def bhat_coeffs(prob: FactorizationProblem, ell: int, t: list[int], M: int
                ) -> tuple[list[int], list[int]]:
    """bhat_n = p^(w-2l) t_n + p^(m-l) g1 t_(n-1) + sum_j p^(l(j-2)) g_j t_(n-j)
    with t_0 = t_(-1) = 1 and t_(-n) = 0 for n > 1; returns (bhat, b) where
    b_n = bhat_n / p^(ell n) after asserting the divisibility."""
    p, w, m = prob.p, prob.w, prob.m

    def t_at(i: int) -> int:
        if i >= 1:
            return t[i - 1]
        return 1 if i in (0, -1) else 0

    bhat, b = [], []
    for n in range(1, M + 1):
        acc = p ** (w - 2 * ell) * t_at(n) + p ** (m - ell) * prob.gammas[0] * t_at(n - 1)
        for j in range(2, min(n + 1, len(prob.gammas)) + 1):
            g = prob.gammas[j - 1]
            if g:
                acc += p ** (ell * (j - 2)) * g * t_at(n - j)
        d = p ** (ell * n)
        if acc % d != 0:
            raise DivisibilityViolation(f"p^(ell*{n}) = {d} does not divide bhat_{n} = {acc}")
        bhat.append(acc)
        b.append(acc // d)
    return bhat, b


# ---------------------------------------------------------------------------
# root acquisition
# ---------------------------------------------------------------------------


def _exact_root_report(c: int, p: int, N: int) -> LiftReport:
    return LiftReport(PadicInt(p, N, c % p ** N), 0, INFINITY)


def _find_valuation_root(si: SeriesInput, p: int, ell: int, N: int) -> LiftReport | None:
    """Deterministic scan for a root with vp = ell, refined as needed.

    Candidates start at granularity p^(2*ell+1); exact rational
    evaluation decides admissibility (an exactly-vanishing f(c) is an
    exact root and needs no lifting; truncation would mask these).  Classes
    that stay congruent-to-zero but inadmissible are refined until N.
    """
    base = p ** ell
    cands = [base * u for u in range(1, p ** (ell + 1)) if u % p != 0]
    depth = 2 * ell + 1
    while cands and depth <= N:
        nxt = []
        for c in sorted(cands):
            F = si.eval_exact(c)
            if F == 0:
                return _exact_root_report(c, p, N)
            nu = vp_rat(F, p)
            kappa = vp_rat(si.eval_derivative_exact(c), p)
            if kappa is not INFINITY and kappa >= 0 and nu > 2 * kappa and depth > 2 * kappa:
                # lift on a truncation deep enough that the tail is invisible
                J = max(len(si.head), (N + kappa) // ell + 2)
                rep = lift_general(si.coeffs_upto(J), c, p, N)
                if rep.root.valuation() == ell:
                    return rep
                continue
            step = p ** depth
            for tt in range(p):
                cand = c + tt * step
                if vp_rat(si.eval_exact(cand), p) >= depth + 1:
                    nxt.append(cand)
        cands = nxt
        depth += 1
    return None


# ---------------------------------------------------------------------------
# the factorization pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorChecks:
    product: bool
    constant_term: bool
    divisibility: bool
    reciprocal: bool
    tn_congruences: bool
    tn_recurrence: bool
    root_annihilation: bool
    valuation_bound: bool

    def all_passed(self) -> bool:
        return all(vars(self).values())


@dataclass(frozen=True)
class FactorPair:
    """A * B = f mod x^(order+1), integer coefficients, A(0)B(0) = p^w.

    When ``scale`` != 1 the input had a root with unit part e0 != 1 and
    the pair factors the rescaled series g(x) = f(scale * x) instead
    (``series`` is that g).
    """

    A: tuple
    B: tuple
    order: int
    p: int
    w: int
    m: int
    ell: int
    root: PadicInt
    digits: RootDigits
    series: SeriesInput
    scale: int = 1
    checks: FactorChecks = None


def _gammas_from(si: SeriesInput, p: int, m: int, count: int) -> tuple:
    g1 = si.coeff(1) // p ** m
    return (g1,) + tuple(si.coeff(j) for j in range(2, count + 1))


def factor(f, M: int, p: int | None = None) -> FactorPair:
    """Factor f = p^w + p^m g1 x + ... over Z[[x]], to order M.

    ``f`` may be a coefficient list (polynomial) or a :class:`SeriesInput`.
    Finds a root with vp(r) = ell <= m (smallest ell, then smallest
    residue), extracts its digits, and assembles the two factors; every
    lemma along the way is re-checked at full precision and a failure
    raises rather than returning a bad pair.
    """
    si = _as_input(f)
    f0, f1 = si.coeff(0), si.coeff(1)
    cls = classify(f0, f1)
    if cls.kind != NEEDS_ROOT_ANALYSIS:
        raise WrongShape(f"classification is {cls}, not {NEEDS_ROOT_ANALYSIS}")
    if f0 < 0:
        raise WrongShape("constant term must be +p^w (negate f first)")
    if p is not None and p != cls.p:
        raise WrongShape(f"constant term is a power of {cls.p}, not {p}")
    p, w, m = cls.p, cls.w, cls.m
    if p == 2:
        raise EvenPrime("factorization theorem is stated for odd p")
    if m is INFINITY:
        raise WrongShape("f1 = 0: input lacks the p^m*g1 linear term")

    report = None
    ell = None
    for cand_ell in range(1, min(m, w // 2) + 1):
        n_root = cand_ell * (M + 4)
        report = _find_valuation_root(si, p, cand_ell, n_root)
        if report is not None:
            ell = cand_ell
            break
    if report is None:
        raise NoSuitableRoot(
            f"no root with vp(r) = ell <= min(m={m}, w//2={w // 2}) found"
            + ("; w > 2m, so the out-of-scope fallback algorithm may still factor f"
               if w > 2 * m else ""),
            fallback_out_of_scope=w > 2 * m,
        )
    if not 2 * ell <= w:
        raise PrecisionExhausted(f"2*ell = {2 * ell} > w = {w}: valuation bound violated")

    root = report.root
    scale = 1
    e0 = root.residue // p ** ell % p ** ell
    if e0 != 1:
        # g(x) = f(e0 * x) has the root r/e0, whose unit part is 1 mod p^ell
        scale = e0
        si = si.rescaled(scale)
        root = PadicInt(p, root.precision,
                        root.residue * pow(scale, -1, p ** root.precision))

    digits = root_to_digits(root, ell, M + 1)
    dM = RootDigits(p, ell, digits.digits[:M])
    a = a_coeffs(digits, M)
    t = t_coeffs(digits, M)
    gammas = _gammas_from(si, p, m, M + 2)
    prob = FactorizationProblem(p, w, m, gammas)
    bhat, b = bhat_coeffs(prob, ell, t, M)

    A_ext = [p ** ell, -1] + [-an for an in a]                # through x^(M+1)
    B_ext = [p ** (w - ell), p ** (w - 2 * ell) + p ** (m - ell) * gammas[0]] + b
    A = tuple(A_ext[: M + 1])
    B = tuple(B_ext[: M + 1])

    checks = _run_checks(si, p, w, ell, M, A_ext, B_ext, a, t, digits, root)
    if not checks.all_passed():
        raise PrecisionExhausted(f"internal lemma checks failed: {checks}")
    return FactorPair(A, B, M, p, w, m, ell, root, dM, si, scale, checks)


def _run_checks(si, p, w, ell, M, A_ext, B_ext, a, t, digits, root) -> FactorChecks:
    # product: coefficients 0..M of A*B against f
    prod = polys.mul(A_ext, B_ext)
    product_ok = all(prod[j] == si.coeff(j) for j in range(M + 1))
    constant_ok = A_ext[0] * B_ext[0] == p ** w

    # reciprocal: Ahat * (1 + x + x sum t_n x^n) = 1 mod x^(M+2)
    ahat = Series([1, -1] + [-(p ** (ell * n)) * a[n - 1] for n in range(1, M + 1)], M + 1)
    that = Series([1, 1] + t, M + 1)
    recip_ok = (ahat * that) == Series.one(M + 1)

    # T_n congruences: T_nu(p^ell) = t_nu mod p^(ell(nu+2)), nu in [-1, M]
    tn_ok = True
    for nu in range(-1, M + 1):
        Tn = tn_series(digits, nu, nu + 1 if nu + 1 <= len(digits.digits) else len(digits.digits))
        val = sum(int(c) * p ** (ell * k) for k, c in enumerate(Tn.coeffs))
        t_nu = t[nu - 1] if nu >= 1 else 1
        if (val - t_nu) % p ** (ell * (nu + 2)) != 0:
            tn_ok = False
            break

    # recurrence T_(n-1) = E * T_n on a sample of indices
    rec_ok = True
    order = len(digits.digits)
    E = e_series(digits, order)
    for n in range(-2, min(5, M) + 1):
        lhs = tn_series(digits, n - 1, order)
        rhs = (E * tn_series(digits, n, order)).truncate(order)
        if lhs != rhs:
            rec_ok = False
            break

    # A annihilates the root mod p^(ell(M+2))
    mod_ann = p ** (ell * (M + 2))
    ann_ok = polys.evaluate(A_ext, root.residue) % mod_ann == 0

    return FactorChecks(product_ok, constant_ok, True, recip_ok, tn_ok, rec_ok,
                        ann_ok, 2 * ell <= w)


@dataclass(frozen=True)
class FactorReport:
    product_ok: bool
    constant_ok: bool
    integral_ok: bool
    mismatches: tuple

    def passed(self) -> bool:
        return self.product_ok and self.constant_ok and self.integral_ok


def verify_factorization(f, pair: FactorPair, M: int) -> FactorReport:
    """Recompute A*B mod x^(M+1) against f; report, never raise.

    ``f`` should be the series the pair claims to factor (``pair.series``
    covers the rescaled case).
    """
    si = _as_input(f)
    prod = polys.mul(list(pair.A), list(pair.B))
    mismatches = []
    for j in range(M + 1):
        lhs = prod[j] if j < len(prod) else 0
        if lhs != si.coeff(j):
            mismatches.append((j, lhs, si.coeff(j)))
    integral = all(isinstance(c, int) for c in pair.A + pair.B)
    constant_ok = pair.A[0] * pair.B[0] == si.coeff(0)
    return FactorReport(not mismatches, constant_ok, integral, tuple(mismatches))


def factor_multiple_root(f) -> tuple[list[int], list[int]]:
    """Split off G = gcd(f, f') when f has a multiple root.

    Returns (G, f_red) with G primitive in Z[x], f = G * f_red exactly.
    Raises NoMultipleRoot for squarefree f.
    """
    f = [int(c) for c in f]
    G = polys.gcd_primitive(f, polys.derivative(f))
    if polys.degree(G) < 1:
        raise NoMultipleRoot("gcd(f, f') is constant")
    q, r = polys.divmod_exact(f, G)
    if any(c != 0 for c in r):
        raise DomainError("gcd does not divide f: inconsistent state")
    f_red = [_as_int(Fraction(c), "f_red coefficient") for c in q]
    if polys.mul(G, f_red) != polys.trim(f):
        raise DomainError("G * f_red != f after normalization")
    return G, f_red
