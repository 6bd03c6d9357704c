"""
Laurent polynomials, Newton polygons and line factors
=====================================================

Three binary polynomials serve as running examples: the Ledrappier
polynomial 1 + X + Y, the four-dot square (1 + X)(1 + Y) and its dilate
(1 + X^2)(1 + Y^2).
"""

from algsubshift import GF, LaurentPoly, classify_nivat, newton_polygon, sublattice_index
from algsubshift.algebra import monomial_normal_form, unimodular_change

F2 = GF(2)
f_L = LaurentPoly.parse("1 + X + Y", F2)
f_S = LaurentPoly.parse("1 + X + Y + X*Y", F2)
f_T = LaurentPoly.parse("1 + X^2 + Y^2 + X^2*Y^2", F2)

# Arithmetic is exact and printed in a fixed term order.
print((1 + LaurentPoly.parse("X", F2)) * (1 + LaurentPoly.parse("Y", F2)))
print(LaurentPoly.parse("1 + X", F2) ** 2)

# Negative exponents are fine; the normal form pulls out a monomial.
g = LaurentPoly.parse("X^-1*Y^-1", F2) * LaurentPoly.parse("X*Y + Y + X", F2)
print(monomial_normal_form(g))

# Shear X^i Y^j -> X^i Y^(j-i): the diagonal 1 + XY becomes 1 + X.
print(unimodular_change(LaurentPoly.parse("1 + X*Y", F2), ((1, 0), (-1, 1))))

# The triangle has no parallel edges, the squares have two pairs.
for name, f in [("f_L", f_L), ("f_S", f_S), ("f_T", f_T)]:
    poly = newton_polygon(f)
    print(name, "vertices", poly.vertices, "sublattice index", sublattice_index(f))
    print(classify_nivat(f).report())
    print()
