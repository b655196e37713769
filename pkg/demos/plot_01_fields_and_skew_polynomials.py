"""
Finite fields and twisted polynomials
=====================================

Field elements are small integers; a GF object does the arithmetic.
Twisted polynomials sum b_i tau^i multiply with tau * b = b^q * tau and act
on the field as additive polynomials.
"""

from dforms import gf, SkewPoly, kernel_roots, skew_right_divide

# F_4 = F_2[w]/(w^2 + w + 1); w has code 2, and w^2 = w + 1 has code 3
F4 = gf(4)
w = F4(2)
print("w*w =", w * w, "  frobenius(w) =", w.frobenius(1))

# an extension tower: F_64 over F_4, coordinates printed lowest first
L = F4.extension(3)
print(L, "has", L.order, "elements")

# tau * w over F_4 with q = 2 moves w past tau as w^2
tau = SkewPoly.tau(F4, 2)
print("tau*w =", tau * SkewPoly(F4, [w], 2))

# right division undoes multiplication
f = SkewPoly(L, [L(3), L(17), L(1)], 4)
g = SkewPoly(L, [L(5), L(1)], 4)
quo, rem = skew_right_divide(f * g, g)
print("(f*g)/g == f:", quo == f, " remainder zero:", rem.is_zero())

# roots of the additive polynomial X^4 + X in F_64 (characteristic 2) are exactly F_4
roots = kernel_roots(SkewPoly(L, [L(1), L(1)], 4), L)
print("roots of tau + 1:", sorted(x.value for x in roots))
