"""Quantum seed mutation on Gr(2,4): the smallest interesting example.

The rectangle seed has one mutable position, labelled {1,3}; mutating it
is a geometric exchange to {2,4}, the new variable is the two-term
quantum Laurent expansion of the short Plücker relation, and mutating
again restores everything exactly.
"""

import random

from qgrass import check_compatible, classical_plucker_eval, initial_seed, mutate_seed

seed = initial_seed(2, 4)
print("labels:", seed.labels)
print("B column:", tuple(r[0] for r in seed.B))
print("L:", [list(r) for r in seed.L])
print("compatibility d =", check_compatible(seed.B, seed.L))

once = mutate_seed(seed, 0)
print("\nafter mutating position 1:")
print("  label {1,3} ->", once.labels[0])
print("  new variable:", once.vars[0])
print("  new L row 0:", once.L[0])

twice = mutate_seed(once, 0)
print("\nmutating again restores the seed exactly:", twice == seed)

# the classical shadow: specialise at q = 1 and evaluate at honest minors
rng = random.Random(12)
while True:
    matrix = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(2)]
    values = [classical_plucker_eval(matrix, label) for label in seed.labels]
    if all(v != 0 for v in values):
        break
print("\nrandom integer 2x4 matrix:", matrix)
print("value of the mutated variable at its minors:",
      once.vars[0].evaluate_classical(values))
print("the {2,4} minor of the same matrix:        ",
      classical_plucker_eval(matrix, (2, 4)))
