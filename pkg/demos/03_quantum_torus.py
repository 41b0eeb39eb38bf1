"""Arithmetic in a based quantum torus: products, scalars, exact division.

All scalars live in the fraction field of Z[u] with u = q^(1/2); the
based monomials X^a absorb a half-integer power of q so that the product
rule stays symmetric.
"""

from qgrass import TorusElement, UFrac, gamma, mul_monomials

# two variables with X1 X2 = q^{-1} X2 X1
lam = ((0, -1), (1, 0))

X1 = TorusElement.unit_variable(lam, 0)
X2 = TorusElement.unit_variable(lam, 1)

print("gamma((1,1)) =", gamma((1, 1), lam))
print("mul_monomials(e1, e2) =", mul_monomials((1, 0), (0, 1), lam))
print("X1*X2 =", X1 * X2)
print("X2*X1 =", X2 * X1)

# the ratio of the two products is exactly q^{lambda_12}
lhs = X1 * X2
rhs = (X2 * X1).scale(UFrac.upower(2 * lam[0][1]))
print("X1 X2 == q^(-1) X2 X1:", lhs == rhs)

# exact right division: build P = Q*D, then recover Q
Q = TorusElement(lam, {(2, -1): UFrac.upower(3), (0, 1): UFrac.from_int(-2)})
D = TorusElement(lam, {(1, 1): UFrac.from_int(1), (0, 0): UFrac.upower(-1)})
P = Q * D
print("\nP = Q*D has", len(P.terms), "terms; P/D == Q:", P.right_divide(D) == Q)

# division detects non-multiples via the forced support box
from qgrass.errors import NotDivisible

bad = TorusElement(lam, {(1, 0): UFrac.from_int(1), (0, 1): UFrac.from_int(1)})
two_term = TorusElement(lam, {(0, 0): UFrac.from_int(1), (2, 0): UFrac.from_int(1)})
try:
    bad.right_divide(two_term)
except NotDivisible as exc:
    print("non-multiple rejected:", exc)

# specialisation at q = 1 turns torus elements into classical Laurent data
print("\nq = 1 shadow of X1*X2:", (X1 * X2).specialize_q1())
print("value at (x1, x2) = (3, 5):", (X1 * X2).evaluate_classical([3, 5]))
