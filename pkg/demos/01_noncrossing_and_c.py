"""Weak separation and the quasi-commutation exponent c(I, J).

Two minor labels either cross or admit a splitting of one set difference
around the other; non-crossing pairs get an integer exponent c(I, J)
governing how the corresponding quantum minors q-commute.
"""

from qgrass import c_exponent, classify_noncrossing
from qgrass.subsets import cyclic_shift_subset

pairs = [
    ((1, 3), (2, 4)),   # the crossing pair of Gr(2,4)
    ((1, 2), (3, 4)),   # consecutive intervals
    ((1, 4), (2, 3)),   # nested
    ((1, 3), (1, 2)),   # overlapping
]

for I, J in pairs:
    cls = classify_noncrossing(I, J)
    if cls.crossing:
        print(f"I={I}, J={J}: crossing")
        continue
    print(f"I={I}, J={J}: non-crossing, c(I,J) = {cls.c}")
    if cls.case_i is not None:
        print(f"   case (i):  J' = {cls.case_i[0]}, J'' = {cls.case_i[1]}")
    if cls.case_ii is not None:
        print(f"   case (ii): I' = {cls.case_ii[0]}, I'' = {cls.case_ii[1]}")

# antisymmetry: c(I, J) = -c(J, I)
print("\nantisymmetry:", c_exponent((1, 2), (3, 4)), "=", -c_exponent((3, 4), (1, 2)))

# crossing-ness only depends on the cyclic order; c itself does not
I, J = (1, 2), (3, 4)
print("\ncyclic rotation by 1 (n = 4):")
for s in range(4):
    Is, Js = cyclic_shift_subset(I, s, 4), cyclic_shift_subset(J, s, 4)
    cls = classify_noncrossing(Is, Js)
    print(f"  shift {s}: I={Is}, J={Js}, crossing={cls.crossing}, c={cls.c}")
