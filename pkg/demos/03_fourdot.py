"""
Splitting four-dot configurations
=================================

Configurations annihilated by (1 + X)(1 + Y) over F_2 have the form
c[i, j] = r[i] + s[j].  Such a c splits into a part constant along rows and
a part constant along columns, with an integer correction term d.
"""

from algsubshift import FourDotSource, Region, format_grid, fourdot_decompose, nivat_pipeline, window_of
from algsubshift.pipeline import worked_example

src = FourDotSource((0, 1, 1, 0, 1), (0, 0, 1))
win = window_of(src, Region(0, 0, 10, 6))
print(format_grid(win))

dec = fourdot_decompose(win)
print("h (constant along rows)")
print(format_grid(dec.h))
print("v (constant along columns)")
print(format_grid(dec.v))
print(dec.report())

# the full pipeline on a 64x64 window
print(nivat_pipeline(*worked_example("fourdot")).to_text())
