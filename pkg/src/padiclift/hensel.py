"""Explicit Hensel lifting in Z_p by closed-form series.

Each lift sums the Bell-polynomial root series of the Taylor expansion of
f at the seed: writing c_j = f^(j)(r0)/j!, the correction is

    sum_n bracket_n(c) * (c0/c1)^(n+1),

whose n-th term has p-adic valuation at least (n+1) vp(c0) - vp((n+1)!),
so the sum is truncated once that bound clears the target precision and
the result is certified by an exact residual check f(root) = 0 mod p**N.

Degenerate seeds (f(r0) = 0 mod p**nu only, derivative of valuation
kappa > 0) go through the rescaled expansion c_j = p^((j-2)kappa)
f^(j)(r0)/j! with 2*kappa < nu; see :func:`lift_general`.  Seeds that do
not separate (double roots mod p) can be refined with :func:`lift_all`.

Every closed-form path has an independent check: :func:`newton_lift` is
the classical quadratically-convergent iteration, kept free of any Bell
machinery so the two can be compared bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .bigmath import INFINITY, binom, vp, vp_factorial
from .errors import DomainError
from .padic import PadicInt
from .series import formal_root_brackets


class NotARootModP(DomainError):
    """Seed fails f(r0) = 0 at the required modulus."""


class DerivativeNotUnit(DomainError):
    """Derivative valuation does not match what the lift requires."""


class EvenPrime(DomainError):
    """The simple-root series is stated for odd primes only."""


class InsufficientCongruence(DomainError):
    """Parameters violate 0 <= 2*kappa < nu (or the p = 2 margin)."""


class NonIntegralShift(DomainError):
    """Rescaled Taylor coefficients left Z_p: 2*kappa too large for this seed."""


class OutOfRange(DomainError):
    """Teichmuller argument outside {1, ..., p-1} or p not an odd prime."""


class BadExponents(DomainError):
    """Sparse lift needs 1 < l < m."""


class NotDivisible(DomainError):
    """Sparse lift needs p | a0."""


@dataclass(frozen=True)
class ShiftedTaylor:
    """Coefficients c_j of p^(-2k) f(r0 + p^k x); all lie in Z_p."""

    cs: tuple
    shift: int
    kappa: int


@dataclass(frozen=True)
class LiftReport:
    """A certified lift: root, number of series terms summed, and the exact
    valuation of f(root.residue) (INFINITY when the residue is a true
    integer root)."""

    root: PadicInt
    terms_used: int
    residual_valuation: object


def taylor_shift(f, r0: int, kappa: int = 0, p: int | None = None) -> ShiftedTaylor:
    """Taylor data of g(x) = p^(-2*kappa) f(r0 + p^kappa x).

    With kappa = 0 this is the plain shift c_j = f^(j)(r0)/j!.  For
    kappa > 0 the prime must be supplied; if any c_j has negative
    valuation the pair (r0, kappa) is inconsistent and NonIntegralShift
    is raised.
    """
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    if kappa > 0 and p is None:
        raise ValueError("p is required when kappa > 0")
    base = polys.taylor_coeffs(list(f), r0)
    if kappa == 0:
        return ShiftedTaylor(tuple(Fraction(c) for c in base), r0, 0)
    cs = []
    for j, c in enumerate(base):
        cs.append(Fraction(c) * Fraction(p) ** ((j - 2) * kappa))
    for j, c in enumerate(cs):
        if c.denominator % p == 0:
            raise NonIntegralShift(
                f"c_{j} = {c} has negative valuation; 2*kappa={2 * kappa} exceeds vp(f^({j})(r0)/{j}!)"
            )
    return ShiftedTaylor(tuple(cs), r0, kappa)


# ---------------------------------------------------------------------------
# series engine
# ---------------------------------------------------------------------------


def _reduce_mod(x: Fraction, modulus: int) -> int:
    """Reduce a rational with denominator coprime to the modulus."""
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def _term_count(v0: int, p: int, N: int) -> int:
    """Terms needed so every omitted term has valuation >= N.

    Term n has vp >= (n+1)*v0 - vp((n+1)!) > (n+1)*(v0 - 1/(p-1)), so
    n+1 >= N(p-1)/(v0(p-1)-1) suffices for all later terms as well.
    """
    denom = v0 * (p - 1) - 1
    if denom <= 0:
        raise InsufficientCongruence(
            f"series does not converge: vp(c0)={v0} too small for p={p}"
        )
    return -(-N * (p - 1) // denom)  # ceil


def series_terms(cs, p: int, count: int) -> list[Fraction]:
    """First ``count`` exact terms bracket_n * (c0/c1)^(n+1) of the root series.

    Exposed so tests can check the term-valuation growth directly.
    """
    cs = [Fraction(c) for c in cs]
    brackets = formal_root_brackets(cs, count - 1)
    ratio = cs[0] / cs[1]
    return [br * ratio ** (n + 1) for n, br in enumerate(brackets)]


def _root_series_residue(cs, p: int, N: int) -> tuple[int, int]:
    """Sum the root series of the Taylor data cs modulo p**N.

    Requires vp(cs[0]) >= 1 and vp(cs[1]) = 0; returns (residue in
    p*Z/p^N, number of terms summed).
    """
    c0 = cs[0]
    if c0 == 0:
        return 0, 0
    v0 = vp(int(c0), p)
    count = _term_count(v0, p, N)
    modulus = p ** N
    acc = 0
    for term in series_terms(cs, p, count):
        if term:
            acc = (acc + _reduce_mod(term, modulus)) % modulus
    return acc, count


def _validate_simple(f, r0: int, p: int):
    if p == 2:
        raise EvenPrime("the simple-root series requires p > 2")
    if polys.evaluate(f, r0) % p != 0:
        raise NotARootModP(f"f({r0}) != 0 mod {p}")
    if polys.evaluate(polys.derivative(f), r0) % p == 0:
        raise DerivativeNotUnit(f"f'({r0}) = 0 mod {p}: seed is not a simple root")


def _report(f, p: int, N: int, residue: int, terms: int) -> LiftReport:
    root = PadicInt(p, N, residue)
    fr = polys.evaluate(f, root.residue)
    rv = INFINITY if fr == 0 else vp(fr, p)
    if rv < N:
        raise DomainError(
            f"internal truncation error: residual valuation {rv} < target {N}"
        )
    return LiftReport(root, terms, rv)


def lift_simple(f, r0: int, p: int, N: int) -> LiftReport:
    """Lift a simple root mod p (p odd) to a root of f modulo p**N.

    Needs f(r0) = 0 mod p and vp(f'(r0)) = 0; the result is congruent to
    r0 mod p and satisfies f(root) = 0 mod p**N.
    """
    f = [int(c) for c in f]
    _validate_simple(f, r0, p)
    r0 %= p
    cs = polys.taylor_coeffs(f, r0)
    rho, terms = _root_series_residue(cs, p, N)
    return _report(f, p, N, (r0 + rho) % p ** N, terms)


def lift_general(f, r0: int, p: int, N: int,
                 nu: int | None = None, kappa: int | None = None) -> LiftReport:
    """Extended lift: seed correct mod p**nu, derivative valuation kappa.

    Requires 0 <= 2*kappa < nu (for p = 2 the stricter nu >= 2*kappa + 2,
    without which the series terms do not shrink).  nu and kappa are
    derived from f and r0 when not supplied; explicit values are
    validated.  The root is congruent to r0 mod p**(kappa+1).
    """
    f = [int(c) for c in f]
    if p < 2:
        raise DomainError(f"p={p} is not prime")
    fr0 = polys.evaluate(f, r0)
    dfr0 = polys.evaluate(polys.derivative(f), r0)
    nu_true = vp(fr0, p)
    kappa_true = vp(dfr0, p)
    if nu is not None and nu_true < nu:
        raise NotARootModP(f"f({r0}) != 0 mod {p}^{nu} (vp = {nu_true})")
    if kappa is not None and kappa_true != kappa:
        raise DerivativeNotUnit(f"vp(f'({r0})) = {kappa_true}, not the requested {kappa}")
    if nu is None and kappa is None and nu_true >= N:
        # the seed is already a root to target precision (includes exact roots)
        return _report(f, p, N, r0 % p ** N, 0)
    if nu is None:
        nu = N if nu_true is INFINITY else min(nu_true, N)
    if kappa is None:
        if kappa_true is INFINITY:
            raise DerivativeNotUnit(f"f'({r0}) = 0 exactly; no simple root above this seed")
        kappa = kappa_true
    if not 0 <= 2 * kappa < nu:
        raise InsufficientCongruence(f"need 0 <= 2*kappa < nu, got kappa={kappa}, nu={nu}")
    if p == 2 and nu - 2 * kappa < 2:
        raise InsufficientCongruence(
            "p = 2 needs nu >= 2*kappa + 2: with margin 1 the series terms do not tend to 0"
        )
    if fr0 == 0:
        return _report(f, p, N, r0 % p ** N, 0)
    r0 %= p ** nu
    shifted = taylor_shift(f, r0, kappa, p)
    cs = [int(c) for c in shifted.cs]
    n_inner = max(N - kappa, 1)
    rho, terms = _root_series_residue(cs, p, n_inner)
    return _report(f, p, N, (r0 + p ** kappa * rho) % p ** N, terms)


def lift_all(f, r0: int, p: int, N: int, max_depth: int | None = None) -> list[LiftReport]:
    """All roots of f in Z_p lying over the seed class r0 mod p.

    Refines the seed modulo growing powers of p until each surviving
    class satisfies the lift_general hypotheses with room to spare
    (depth > 2*kappa guarantees a unique root per class), then lifts.
    Classes that never separate (multiple p-adic roots) raise
    DerivativeNotUnit at the depth cap.
    """
    f = [int(c) for c in f]
    if max_depth is None:
        max_depth = max(2 * N, 16)
    df = polys.derivative(f)
    r0 %= p
    if polys.evaluate(f, r0) % p != 0:
        raise NotARootModP(f"f({r0}) != 0 mod {p}")
    live = [r0]
    found: dict[int, LiftReport] = {}
    depth = 1
    while live and depth <= max_depth:
        nxt = []
        for c in live:
            fc = polys.evaluate(f, c)
            kc = vp(polys.evaluate(df, c), p)
            nc = vp(fc, p)
            margin = 2 if p == 2 else 1
            if kc is not INFINITY and nc > 2 * kc + (margin - 1) and depth > 2 * kc:
                rep = lift_general(f, c, p, N)
                found.setdefault(rep.root.residue, rep)
                continue
            step = p ** depth
            for t in range(p):
                cand = c + t * step
                if polys.evaluate(f, cand) % (step * p) == 0:
                    nxt.append(cand)
        live = nxt
        depth += 1
    if live:
        raise DerivativeNotUnit(
            f"seed classes {sorted(set(x % p ** min(depth, 6) for x in live))} did not separate "
            f"by depth {max_depth}: multiple p-adic root suspected"
        )
    return [found[k] for k in sorted(found)]


def newton_lift(f, r0: int, p: int, N: int) -> PadicInt:
    """Classical Newton/Hensel iteration, the oracle for the series lifts.

    Quadratic convergence: precision doubles per step.  Same simple-root
    hypotheses as lift_simple, but any prime is accepted.
    """
    f = [int(c) for c in f]
    if polys.evaluate(f, r0) % p != 0:
        raise NotARootModP(f"f({r0}) != 0 mod {p}")
    df = polys.derivative(f)
    if polys.evaluate(df, r0) % p == 0:
        raise DerivativeNotUnit(f"f'({r0}) = 0 mod {p}")
    r = r0 % p
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        m = p ** prec
        r = (r - polys.evaluate(f, r) * pow(polys.evaluate(df, r) % m, -1, m)) % m
    if polys.evaluate(f, r) % p ** N != 0:
        raise DomainError("newton iteration failed its residual check")
    return PadicInt(p, N, r)


# ---------------------------------------------------------------------------
# low-degree and sparse specializations
# ---------------------------------------------------------------------------


def _ilog(x: int, p: int) -> int:
    """floor(log_p(x)) for x >= 1."""
    e = 0
    while x >= p:
        x //= p
        e += 1
    return e


def lift_quadratic(a0: int, a1: int, a2: int, r0: int, p: int, N: int) -> LiftReport:
    """Catalan-number form of the simple lift for degree <= 2.

    r = r0 - (c0/c1) * sum_n Cat_n (c0 c2 / c1^2)^n, truncated once the
    term valuation (n+1) vp(c0) + n vp(c2) reaches N.
    """
    f = [int(a0), int(a1), int(a2)]
    _validate_simple(f, r0, p)
    r0 %= p
    c0 = polys.evaluate(f, r0)
    c1 = polys.evaluate(polys.derivative(f), r0)
    c2 = f[2]
    if c0 == 0:
        return _report(f, p, N, r0 % p ** N, 0)
    v0 = vp(c0, p)
    v2 = vp(c2, p) if c2 else None
    modulus = p ** N
    acc = r0 % modulus
    n = 0
    while True:
        term = -Fraction(binom(2 * n, n), n + 1) * Fraction(c0) ** (n + 1) * Fraction(c2) ** n / Fraction(c1) ** (2 * n + 1)
        if term:
            acc = (acc + _reduce_mod(term, modulus)) % modulus
        n += 1
        if c2 == 0 or (n + 1) * v0 + n * v2 >= N:
            break
    return _report(f, p, N, acc, n)


def lift_cubic(a0: int, a1: int, a2: int, a3: int, r0: int, p: int, N: int) -> LiftReport:
    """Double-sum form of the simple lift for degree <= 3.

    r = r0 - (c0/c1) sum_k [ sum_j (-1)^(k-j) c2^j/(2k-j+1) C(k,j) C(3k-j,k)
        (c0 c3/c1)^(k-j) ] (c0/c1^2)^k,
    with c2 = f''(r0)/2 and c3 the leading coefficient.
    """
    f = [int(a0), int(a1), int(a2), int(a3)]
    _validate_simple(f, r0, p)
    r0 %= p
    cs = polys.taylor_coeffs(f, r0)
    c0, c1, c2, c3 = cs[0], cs[1], cs[2], cs[3]
    if c0 == 0:
        return _report(f, p, N, r0 % p ** N, 0)
    v0 = vp(c0, p)
    modulus = p ** N
    acc = r0 % modulus
    ratio_outer = Fraction(c0, c1 * c1)
    front = Fraction(c0, c1)
    inner_base = Fraction(c0) * c3 / c1
    k = 0
    while True:
        bracket = Fraction(0)
        for j in range(k + 1):
            t = (Fraction((-1) ** (k - j) * binom(k, j) * binom(3 * k - j, k), 2 * k - j + 1)
                 * Fraction(c2) ** j * inner_base ** (k - j))
            bracket += t
        term = -front * bracket * ratio_outer ** k
        if term:
            acc = (acc + _reduce_mod(term, modulus)) % modulus
        k += 1
        if (k + 1) * v0 - _ilog(2 * k + 1, p) >= N:
            break
    return _report(f, p, N, acc, k)


def lift_sparse(a0: int, a1: int, al: int, am: int, l: int, m: int,
                p: int, N: int) -> LiftReport:
    """Lift of the seed 0 for f = a0 + a1 x + al x^l + am x^m, 1 < l < m.

    Needs p | a0 and p coprime to a1.  Implements the closed double sum

    r = -(a0/a1) sum_k [ sum_j (-1)^(m(k-j)+l j) al^j / (m(k-j)+l j-k+1)
        C(k,j) C(m(k-j)+l j, k) (a0^(m-l) am / a1^(m-l))^(k-j) ]
        (a0^(l-1) / a1^l)^k.
    """
    if not 1 < l < m:
        raise BadExponents(f"need 1 < l < m, got l={l}, m={m}")
    if p == 2:
        raise EvenPrime("the sparse series requires p > 2")
    a0, a1, al, am = int(a0), int(a1), int(al), int(am)
    f = [0] * (m + 1)
    f[0], f[1], f[l], f[m] = a0, a1, al, am
    if a0 % p != 0:
        raise NotDivisible(f"p={p} does not divide a0={a0}")
    if a1 % p == 0:
        raise DerivativeNotUnit(f"p={p} divides a1={a1}")
    if a0 == 0:
        return _report(f, p, N, 0, 0)
    v0 = vp(a0, p)
    modulus = p ** N
    acc = 0
    front = -Fraction(a0, a1)
    inner_base = Fraction(a0) ** (m - l) * am / Fraction(a1) ** (m - l)
    outer_base = Fraction(a0) ** (l - 1) / Fraction(a1) ** l
    k = 0
    while True:
        bracket = Fraction(0)
        for j in range(k + 1):
            e = m * (k - j) + l * j
            bracket += (Fraction((-1) ** e * binom(k, j) * binom(e, k), e - k + 1)
                        * Fraction(al) ** j * inner_base ** (k - j))
        term = front * bracket * outer_base ** k
        if term:
            acc = (acc + _reduce_mod(term, modulus)) % modulus
        k += 1
        if (k + 1) * v0 - _ilog(m * k + 1, p) >= N:
            break
    return _report(f, p, N, acc, k)


# ---------------------------------------------------------------------------
# Teichmuller lifts
# ---------------------------------------------------------------------------


def teichmuller(q: int, p: int, N: int) -> PadicInt:
    """The (p-1)-st root of unity in Z_p congruent to q mod p (p odd).

    Triple-sum root-of-unity series: with c0 = q^(p-1) - 1 and
    c1 = (p-1) q^(p-2),

    xi = q - (c0/c1) sum_n [ sum_k sum_j (-1)^(n-j) / ((p-1)^k (n+1)! k!)
         C(2n+1, n-k) C(k, j) (j(p-1))_(n+k) ] (c0/(q c1))^n.

    The result is checked on the spot: xi = q mod p and xi^(p-1) = 1
    mod p**N.
    """
    if p <= 2 or not 1 <= q <= p - 1:
        raise OutOfRange(f"need p an odd prime and 1 <= q <= p-1, got q={q}, p={p}")
    modulus = p ** N
    c0 = q ** (p - 1) - 1
    c1 = (p - 1) * q ** (p - 2)
    if c0 == 0:
        return PadicInt(p, N, q % modulus)
    v0 = vp(c0, p)
    count = _term_count(v0, p, N)
    # prefix products of falling factorials (a)_i for each a = j*(p-1)
    fall: dict[int, list[int]] = {}

    def falling_of(a: int, n: int) -> int:
        row = fall.setdefault(a, [1])
        while len(row) <= n:
            i = len(row)
            row.append(row[-1] * (a - i + 1))
        return row[n]

    acc = q % modulus
    front = -Fraction(c0, c1)
    ratio = Fraction(c0, q * c1)
    for n in range(count):
        bracket = Fraction(0)
        np1fac = math.factorial(n + 1)
        for k in range(n + 1):
            b2 = binom(2 * n + 1, n - k)
            kfac = math.factorial(k)
            for j in range(k + 1):
                fa = falling_of(j * (p - 1), n + k)
                if fa == 0:
                    continue
                bracket += Fraction((-1) ** (n - j) * b2 * binom(k, j) * fa,
                                    (p - 1) ** k * np1fac * kfac)
        term = front * bracket * ratio ** n
        if term:
            acc = (acc + _reduce_mod(term, modulus)) % modulus
    if acc % p != q % p or pow(acc, p - 1, modulus) != 1 % modulus:
        raise DomainError("teichmuller series failed its root-of-unity check")
    return PadicInt(p, N, acc)


def teichmuller_oracle(q: int, p: int, N: int) -> PadicInt:
    """Iterated powering: xi = lim q^(p^k) mod p**N, the independent check."""
    if p <= 2 or not 1 <= q <= p - 1:
        raise OutOfRange(f"need p an odd prime and 1 <= q <= p-1, got q={q}, p={p}")
    modulus = p ** N
    x = q % modulus
    while True:
        y = pow(x, p, modulus)
        if y == x:
            return PadicInt(p, N, x)
        x = y
