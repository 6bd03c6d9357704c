"""
Ledrappier tori and the periodicity pipeline
============================================

The additive cellular automaton with rule 1 + X generates space-time
diagrams annihilated by 1 + X + Y.  Closing a seed row into a torus gives
a two-periodic configuration; the pipeline recovers periods from a kernel
annihilator by elimination.
"""

import itertools

from algsubshift import (
    GF,
    LaurentPoly,
    Shape,
    additive_ca_torus,
    complexity_count,
    format_grid,
    ledrappier_ideal_membership,
    nivat_pipeline,
)

F2 = GF(2)
rule = LaurentPoly.parse("1 + X", F2)
f_L = LaurentPoly.parse("1 + X + Y", F2)

src = additive_ca_torus(rule, (0, 0, 0, 1, 0, 1))
print(format_grid(src.domain()))
print(nivat_pipeline(src, f_L, Shape.block(3)).to_text())

# ideal membership: substitute X = 1 + Y
print(ledrappier_ideal_membership(f_L * LaurentPoly.parse("1 + X*Y", F2)))
print(ledrappier_ideal_membership(LaurentPoly.parse("1 + Y", F2)))

# survey every seed of width 6: which tori have at most 9 patterns in a 3x3 block
for seed in itertools.product((0, 1), repeat=6):
    torus = additive_ca_torus(rule, seed)
    if torus is None:
        continue
    count, low = complexity_count(torus, Shape.block(3))
    print("".join(map(str, seed)), "height", torus.domain().height, "patterns", count, "low" if low else "")
