"""Welschinger tables of plane cubics and quartics, straight from lattice paths.

Counts every consistent subdivision, then checks the tables against the
closed form for cubics and the difference relation tying quartics to cubics.
"""
from tropicount import DivisorSpec, conjecture_report, welschinger, welschinger_table
from tropicount.oracles import forward_difference, kontsevich_N

P3, P4 = DivisorSpec.plane(3), DivisorSpec.plane(4)

w3 = welschinger_table(P3)
print("cubics   W(3, m) =", w3, " (8 - 2m)")

w4 = welschinger_table(P4)
print("quartics W(4, m) =", w4)
r = welschinger(P4, 0)
print(f"  m = 0 took {r.stats.paths} paths, {r.stats.consistent} consistent subdivisions")

# second differences of the quartic table are four times the cubic table
print("  second differences:", forward_difference(w4, 2), "= 4 x", w3[:4])

# the real counts never exceed the complex ones
print(f"  N_3 = {kontsevich_N(3).N} >= {w3[0]},  N_4 = {kontsevich_N(4).N} >= {w4[0]}")

for line in conjecture_report(P4, w4).lines():
    print(line)
