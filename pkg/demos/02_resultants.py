"""
Resultants and Bezout combinations
==================================

Two polynomials without a common factor can be combined into a polynomial
in one variable only.  Anything annihilated by both is then annihilated by
that univariate combination, so it repeats along that axis.
"""

import random

from algsubshift import GF, LaurentPoly, bezout_cofactors, coprime_periodicity, poly_gcd, resultant

F2, F3 = GF(2), GF(3)
f_L = LaurentPoly.parse("1 + X + Y", F2)
f_S = LaurentPoly.parse("1 + X + Y + X*Y", F2)

print("Res_X(f_L, X)   =", resultant(f_L, LaurentPoly.parse("X", F2)))
print("Res_X(f_L, f_S) =", resultant(f_L, f_S))

# the identity alpha*f + beta*g = r is checked by expanding it
e = bezout_cofactors(f_L, f_S)
print(e.report())

ex, ey = coprime_periodicity(f_L, LaurentPoly.parse("1 + X", F2))
print("Y-only combination:", ex.value, "  X-only combination:", ey.value)

# a shared factor makes the resultant vanish
rng = random.Random(0)
h = LaurentPoly.parse("1 + X + Y^2", F3)
a = h * LaurentPoly(F3, {(rng.randint(0, 2), rng.randint(0, 2)): 1, (0, 0): 2})
b = h * LaurentPoly.parse("X^2 + Y", F3)
print("common factor:", poly_gcd(a, b), " resultant:", resultant(a, b))
