#!/usr/bin/env python3
"""Lagrange inversion and formal roots of power series equations.

The engine underneath all the lifting: if phi(t) = t(1 + sum alpha_r
t^r/r!), its compositional inverse has coefficients given by signed
Bell-polynomial sums.  Specializing phi to x*E(x) for a polynomial f
turns inversion into a *formal root* of f(x) = 0, valid over any field
of coefficients -- convergence is a separate question that the p-adic
modules answer with valuations.
"""

from fractions import Fraction

from padiclift import InversionProblem, formal_root_series, trinomial_root_terms
from padiclift.series import Series, apply_poly_with_indeterminate_constant

def show(series):
    return "[" + ", ".join(str(c) for c in series.coeffs) + "]"


# --- inversion: phi(t) = t(1 + t) inverts to the Catalan generating function
prob = InversionProblem([1, 0, 0, 0, 0, 0])
print("phi(t) = t(1+t)  =>  beta_n =", [str(b) for b in prob.betas])
print("phi^(-1)(u) coefficients:", show(prob.phi_inverse(7)))
print("round trip is the identity:", prob.roundtrip_is_identity())
print()

# --- formal roots: treat the constant term of f as an indeterminate t.
# For f = t + x + x^3 the root is a series in t; substituting it back into
# f must give 0 to the computed order.
a = [0, 1, 0, 1]
root = formal_root_series(a, 8)
print("root of t + x + x^3 = 0 as a series in t:")
print("  x(t) coefficients:", show(root))
residual = apply_poly_with_indeterminate_constant(a, root)
print("  f(x(t)) coefficients:", show(residual), " (identically zero)")
print()

# --- the sparse trinomial x^5 + x = q: Eisenstein's classical series
print("x^5 + x = q  =>  x =", end=" ")
terms = trinomial_root_terms(5, 1, 3)
print(" + ".join(f"({c})q^{e}" for e, c in terms), "+ ...")
print()

# Evaluated 7-adically at q = 7 the series converges; check the residual.
q = 7
N = 12
modulus = 7 ** N
acc = 0
for val in trinomial_root_terms(5, 1, 40, q=q):
    fr = Fraction(val)
    acc = (acc + fr.numerator * pow(fr.denominator, -1, modulus)) % modulus
print(f"7-adic evaluation at q = 7: x = {acc} mod 7^{N}")
print(f"x^5 + x - 7 = 0 mod 7^{N}:", (pow(acc, 5, modulus) + acc - q) % modulus == 0)
