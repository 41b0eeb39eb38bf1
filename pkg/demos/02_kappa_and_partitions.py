"""The kappa invariant of rank-one cycle representations, three ways.

kappa(I, J) is computed from the minimal exponent vector of the generator
of Hom(M_I, M_J); it agrees with an honest linear-algebra computation over
a truncated scalar ring, and kappa(J, I) equals the longest diagonal of
the skew shape between the labels' partitions.
"""

import itertools

from qgrass import (
    kappa,
    kappa_truncated_oracle,
    lambda_pair,
    max_diag,
    min_exponent_vector,
    partition_from_subset,
)

n = 4
I, J = (3, 4), (1, 2)

print(f"n = {n}, I = {I}, J = {J}")
print("minimal exponent vector alpha:", min_exponent_vector(I, J, n))
print("kappa(I,J) = alpha[0] =", kappa(I, J, n))
print("kappa(J,I) =", kappa(J, I, n))
print("lambda(I,J) = kappa(J,I) - kappa(I,J) =", lambda_pair(I, J, n))

# the truncated-ring oracle sets up module homomorphism equations over
# k[t]/(t^D) and measures the codimension of the vertex-0 restriction
print("\ntruncated-ring oracle (D = 8):", kappa_truncated_oracle(I, J, n, 8),
      "and", kappa_truncated_oracle(J, I, n, 8))

# MaxDiag: kappa(I, J) counts boxes on the longest diagonal of the skew shape
pj, pi = partition_from_subset(J), partition_from_subset(I)
print(f"\npartitions: {J} -> {pj}, {I} -> {pi}")
print("MaxDiag(shape(I) \\ shape(J)) =", max_diag(pi, pj),
      "  (= kappa(I,J) =", str(kappa(I, J, n)) + ")")

# sweep: all three computations agree on every pair of 2-subsets of {1..5}
labels = list(itertools.combinations(range(1, 6), 2))
agree = all(
    kappa(A, B, 5) == kappa_truncated_oracle(A, B, 5)
    and kappa(B, A, 5) == max_diag(partition_from_subset(B), partition_from_subset(A))
    for A, B in itertools.product(labels, repeat=2)
)
print("\nall pairs of 2-subsets of {1..5} agree across the three routes:", agree)
