"""
Exact arithmetic
================

Rationals come from :mod:`fractions`; cyclotomic numbers live in
Q[t]/Phi_m(t) and prime fields are plain residues.  Row reduction works the
same way over all three.
"""

from fractions import Fraction

from milnor_monodromy.fields import GF, CycloElement, cyclotomic_polynomial, rref

# Phi_3 = t^2 + t + 1, coefficients listed from the constant term up
print("Phi_3:", cyclotomic_polynomial(3))

zeta = CycloElement.zeta(3)
print("zeta^3 == 1:", zeta * zeta * zeta == CycloElement.from_rational(3, 1))
print("1 + zeta + zeta^2 == 0:", 1 + zeta + zeta * zeta == 0)
print("1/(1 - zeta) =", (1 - zeta).inverse())

# 2 * 2 = 1 in F_3
print("GF(2,3)^2 =", GF(2, 3) * GF(2, 3))

rows, r, pivots = rref([[Fraction(1), 2, 3], [2, 4, 7]])
print("rank", r, "pivots", pivots)
for row in rows:
    print("  ", [str(x) for x in row])
