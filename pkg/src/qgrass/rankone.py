"""The kappa and lambda invariants of rank-one modules on the n-cycle.

A label I defines a rank-one representation M_I of the doubled cycle
quiver (vertices 0..n-1, edge a joining a-1 and a): every vertex carries
the scalar ring, the arrow x_a acts by 1 when a is in I and by t
otherwise, and y_a acts the other way round, so that x_a y_a = t always.

Hom(M_I, M_J) is generated by t^alpha for a single minimal exponent
vector alpha: walking 0 -> 1 -> ... -> n-1 -> 0, the value changes by +1
across an edge of I \\ J, by -1 across an edge of J \\ I, and is
normalised to have minimum 0.  The invariant kappa(I, J) is the value of
alpha at the distinguished vertex 0, and

    lambda(I, J) = kappa(J, I) - kappa(I, J)

is the quasi-commutation exponent c(I, J) whenever the pair is
non-crossing.

An independent cross-check computes the same number by honest linear
algebra over a truncated scalar ring k[t]/(t^D): solve the commuting
conditions for module homomorphisms, restrict them to vertex 0, and take
the codimension of the image.
"""

from __future__ import annotations

from . import exactla
from .errors import SizeMismatch, TruncationTooSmall
from .subsets import as_subset


def _check_pair(I, J, n: int):
    I = as_subset(I)
    J = as_subset(J)
    if len(I) != len(J):
        raise SizeMismatch(f"labels must have equal size: {I!r}, {J!r}")
    if I and I[-1] > n or J and J[-1] > n:
        raise SizeMismatch(f"labels exceed cycle size {n}: {I!r}, {J!r}")
    return I, J


def min_exponent_vector(I, J, n: int) -> tuple[int, ...]:
    """Minimal exponent vector of the generator of Hom(M_I, M_J).

    Entry at vertex v, for v = 0..n-1; minimum exactly 0, consecutive
    steps in {-1, 0, +1}.
    """
    I, J = _check_pair(I, J, n)
    in_i = set(I) - set(J)
    in_j = set(J) - set(I)
    vals = [0] * n
    cur = 0
    for a in range(1, n):
        if a in in_i:
            cur += 1
        elif a in in_j:
            cur -= 1
        vals[a] = cur
    low = min(vals)
    return tuple(v - low for v in vals)


def kappa(I, J, n: int) -> int:
    """dim of the cokernel of Hom(M_I, M_J) -> Hom at vertex 0."""
    return min_exponent_vector(I, J, n)[0]


def lambda_pair(I, J, n: int) -> int:
    """lambda(I, J) = kappa(J, I) - kappa(I, J); antisymmetric."""
    return kappa(J, I, n) - kappa(I, J, n)


def kappa_truncated_oracle(I, J, n: int, trunc: int | None = None) -> int:
    """Recompute kappa over k[t]/(t^trunc) by solving for homomorphisms.

    Unknowns: one scalar-ring element g_v per vertex (the component of the
    homomorphism at v).  For each edge a with tail a-1 and head a mod n,
    commutation with both arrow actions gives

        t^{sI} g_head = t^{sJ} g_tail      (x_a, with t-exponent 1 iff a not in the label)
        t^{1-sI} g_tail = t^{1-sJ} g_head  (y_a)

    Solve the resulting linear system exactly, restrict the solution space
    to the vertex-0 block, and return its codimension.  The default
    truncation 2n is far above the bound kappa <= n/2, so no truncation
    artifact can reach the answer.
    """
    I, J = _check_pair(I, J, n)
    D = 2 * n if trunc is None else trunc
    if D <= n:
        raise TruncationTooSmall(f"need truncation > n = {n}, got {D}")

    set_i = set(I)
    set_j = set(J)

    def var(vertex: int, deg: int) -> int:
        return vertex * D + deg

    rows = []

    def equation(shift_a: int, vert_a: int, shift_b: int, vert_b: int):
        # t^{shift_a} g_{vert_a} - t^{shift_b} g_{vert_b} = 0, degree by degree
        for d in range(D):
            row: dict[int, int] = {}
            if d - shift_a >= 0:
                row[var(vert_a, d - shift_a)] = row.get(var(vert_a, d - shift_a), 0) + 1
            if d - shift_b >= 0:
                col = var(vert_b, d - shift_b)
                row[col] = row.get(col, 0) - 1
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)

    for a in range(1, n + 1):
        tail = a - 1
        head = a % n
        s_i = 0 if a in set_i else 1
        s_j = 0 if a in set_j else 1
        equation(s_i, head, s_j, tail)          # x_a squares commute
        equation(1 - s_i, tail, 1 - s_j, head)  # y_a squares commute

    solutions = exactla.nullspace(rows, n * D)
    image_rank = exactla.projection_rank(solutions, range(D))
    return D - image_rank
