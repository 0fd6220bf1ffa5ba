"""The quintic table without enumerating quintics.

Three numbers come from the engine (a quadric, a quadric and a trapeze);
the rest of the table follows from the third-difference relation with the
quartic table, solved exactly.
"""
import time

from tropicount import DivisorSpec, welschinger, welschinger_table
from tropicount.oracles import quintic_system, solve_difference_system

quartic = welschinger_table(DivisorSpec.plane(4))
t = time.perf_counter()
q33 = welschinger(DivisorSpec.quadric(3, 3), 0).value
p152 = welschinger(DivisorSpec.blown(1, 5, 2), 0).value
print(f"W of Q(3,3) = {q33}, W of P1(5; 2) = {p152}  ({time.perf_counter() - t:.1f}s)")

table = solve_difference_system(quintic_system(quartic, q33=q33, p1_52=p152))
print("W(5, m) =", table)

# cross-check a few entries by brute force (m = 6 and 5 are quick)
for m in (6, 5):
    print(f"  direct enumeration W(5, {m}) =", welschinger(DivisorSpec.plane(5), m).value)
