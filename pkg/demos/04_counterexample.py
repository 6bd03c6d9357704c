"""
A non-periodic configuration of low complexity
==============================================

A dotted horizontal line plus a dotted vertical line is annihilated by
(1 + X^2)(1 + Y^2), sees only 7 patterns through a scattered 3x3 shape of
9 cells, and still has no period.  The defining polynomial has line factors
in two directions and its support spans an index 4 sublattice.
"""

from algsubshift import (
    LaurentPoly,
    Region,
    SublatticeLines,
    apply_poly,
    complexity_count,
    detect_periods,
    format_grid,
    scattered_square,
    sublattice_counterexample,
    window_of,
)
from algsubshift.algebra import GF

src = sublattice_counterexample()
print(format_grid(window_of(src, Region(-6, -6, 12, 12))))

f_T = LaurentPoly.parse("1 + X^2 + Y^2 + X^2*Y^2", GF(2))
big = window_of(src, Region(-64, -64, 128, 128))
print("f_T * c == 0 on the window:", apply_poly(f_T, big).is_zero())

D = scattered_square(3, 2)
print("patterns, low complexity:", complexity_count(src, D, Region(-32, -32, 64, 64)))
print("periods up to 32:", detect_periods(big, 32).vectors)

# each half is periodic on its own
h = window_of(SublatticeLines("h"), Region(-64, -64, 128, 128))
v = window_of(SublatticeLines("v"), Region(-64, -64, 128, 128))
print("(2,0) period of h:", (2, 0) in detect_periods(h, 32))
print("(0,2) period of v:", (0, 2) in detect_periods(v, 32))
