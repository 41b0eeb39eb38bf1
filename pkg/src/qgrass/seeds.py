"""Compatible pairs (B, L), their mutation, and quantum seeds with variables.

A seed holds an N x M exchange matrix B (columns at the M mutable
positions), a skew-symmetric N x N quasi-commutation matrix L, and one
torus element per position: the expansion of that position's cluster
variable in the *initial* quantum torus.  Storing global expansions makes
cross-seed comparisons trivial; the price is that mutation must divide
exactly, which the quantum Laurent phenomenon guarantees.

Mutation in direction k:
  * B' = E^t B F and L' = E^t L E with the standard E, F matrices;
  * the new variable is X_k^* = X^{a'} + X^{a''} where a', a'' have -1 at
    k and the positive/negative parts of column k elsewhere.  To express
    X_k^* in the initial torus we right-multiply by X_k, expand

        X^{a'} X_k = q^{w'} prod_i V_i^{c'_i},
        c' = a' + e_k,  w' = gamma(a') + sum_{i>k} a'_i L_ik,

    through the stored expansions V_i (the analogous w'' for a''), and
    divide the sum exactly by the stored expansion of X_k.
"""

from __future__ import annotations

from .errors import FrozenIndex, InvalidParams, LaurentViolation, NotCompatible, NotDivisible
from .torus import TorusElement, gamma2
from .upoly import UFrac

Matrix = tuple  # tuples of int tuples


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def transpose(mat: Matrix) -> Matrix:
    return tuple(zip(*mat)) if mat else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return ()
    cols = len(b[0])
    inner = len(b)
    return tuple(
        tuple(sum(row[j] * b[j][c] for j in range(inner)) for c in range(cols))
        for row in a
    )


def check_skew_symmetric(L: Matrix):
    N = len(L)
    for i in range(N):
        if len(L[i]) != N:
            raise InvalidParams("L must be square")
        for j in range(N):
            if L[i][j] != -L[j][i]:
                raise InvalidParams(f"L not skew-symmetric at ({i}, {j})")


def check_compatible(B: Matrix, L: Matrix) -> tuple[int, ...]:
    """Return the positive diagonal d of B^t L = [diag(d) | 0].

    Raises NotCompatible with the first offending (k, l) witness.
    """
    N = len(L)
    M = len(B[0]) if B and B[0] else 0
    if len(B) != N:
        raise InvalidParams(f"B has {len(B)} rows but L is {N} x {N}")
    d = []
    for k in range(M):
        for l in range(N):
            s = sum(B[j][k] * L[j][l] for j in range(N))
            if k == l:
                if s <= 0:
                    raise NotCompatible(k, l, s)
                d.append(s)
            elif s != 0:
                raise NotCompatible(k, l, s)
    return tuple(d)


def e_matrix(B: Matrix, k: int) -> Matrix:
    """N x N matrix E of the mutation in direction k (0-based, mutable)."""
    N = len(B)
    M = len(B[0]) if B else 0
    if not (0 <= k < M):
        raise FrozenIndex(f"direction {k} is not mutable (M = {M})")
    rows = []
    for i in range(N):
        row = [1 if i == j else 0 for j in range(N)]
        row[k] = -1 if i == k else max(0, B[i][k])
        rows.append(tuple(row))
    return tuple(rows)


def f_matrix(B: Matrix, k: int) -> Matrix:
    """M x M matrix F of the mutation in direction k."""
    M = len(B[0]) if B else 0
    if not (0 <= k < M):
        raise FrozenIndex(f"direction {k} is not mutable (M = {M})")
    rows = []
    for i in range(M):
        if i != k:
            rows.append(tuple(1 if i == j else 0 for j in range(M)))
        else:
            rows.append(tuple(-1 if j == k else max(0, -B[k][j]) for j in range(M)))
    return tuple(rows)


def mutate_BL(B: Matrix, L: Matrix, k: int) -> tuple[Matrix, Matrix]:
    """(B, L) -> (E B F, E^t L E); preserves compatibility with the same d."""
    E = e_matrix(B, k)
    F = f_matrix(B, k)
    Et = transpose(E)
    return mat_mul(mat_mul(E, B), F), mat_mul(mat_mul(Et, L), E)


def exchange_exponents(B: Matrix, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The exponent vectors a', a'' of the exchange binomial at k."""
    N = len(B)
    M = len(B[0]) if B else 0
    if not (0 <= k < M):
        raise FrozenIndex(f"direction {k} is not mutable (M = {M})")
    a_pos = tuple(-1 if j == k else max(0, B[j][k]) for j in range(N))
    a_neg = tuple(-1 if j == k else max(0, -B[j][k]) for j in range(N))
    return a_pos, a_neg


class QuantumSeed:
    """Positions with labels, matrices (B, L), and initial-torus variables.

    Frozen positions are the trailing N - M ones.  ``lam0`` is the
    quasi-commutation matrix of the initial seed; all stored variables are
    torus elements over lam0.  Equality compares labels, frozen flags, B,
    L and variables, but not the mutation history.
    """

    __slots__ = ("m", "n", "labels", "frozen", "B", "L", "vars", "lam0", "history")

    def __init__(self, m, n, labels, frozen, B, L, vars, lam0, history=()):
        self.m = m
        self.n = n
        self.labels = tuple(tuple(l) if l is not None else None for l in labels)
        self.frozen = tuple(bool(f) for f in frozen)
        self.B = _as_matrix(B)
        self.L = _as_matrix(L)
        self.vars = tuple(vars)
        self.lam0 = _as_matrix(lam0)
        self.history = tuple(history)
        mutable = len(self.B[0]) if self.B and self.B[0] else 0
        if self.frozen != (False,) * mutable + (True,) * (len(self.labels) - mutable):
            raise InvalidParams("frozen positions must be the trailing ones")
        check_skew_symmetric(self.L)

    # -- shape ----------------------------------------------------------------

    @property
    def n_positions(self) -> int:
        return len(self.labels)

    @property
    def n_mutable(self) -> int:
        return len(self.B[0]) if self.B and self.B[0] else 0

    def is_frozen(self, k: int) -> bool:
        return self.frozen[k]

    # -- equality (history excluded) -------------------------------------------

    def cluster_data(self):
        return (
            self.labels,
            self.frozen,
            self.B,
            self.L,
            tuple(v.canonical_key() for v in self.vars),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumSeed):
            return NotImplemented
        return self.cluster_data() == other.cluster_data()

    def __hash__(self):
        return hash(self.cluster_data())

    # -- serialisation -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "positions": [
                {"label": list(l) if l is not None else None, "frozen": f}
                for l, f in zip(self.labels, self.frozen)
            ],
            "B": [list(r) for r in self.B],
            "L": [list(r) for r in self.L],
            "history": [k + 1 for k in self.history],
        }

    def __repr__(self):
        labs = ", ".join(
            ("*" if f else "") + ("".join(map(str, l)) if l else "?")
            for l, f in zip(self.labels, self.frozen)
        )
        return f"QuantumSeed(m={self.m}, n={self.n}, [{labs}], depth={len(self.history)})"


def expand_cluster_monomial(seed: QuantumSeed, exps) -> TorusElement:
    """Ordered product of stored variable expansions with the given
    nonnegative multiplicities, V_1^{e_1} * ... * V_N^{e_N}."""
    acc = TorusElement.one(seed.lam0)
    for i, e in enumerate(exps):
        if e < 0:
            raise InvalidParams("cluster monomial exponents must be nonnegative")
        for _ in range(e):
            acc = acc * seed.vars[i]
    return acc


def mutate_seed(seed: QuantumSeed, k: int) -> QuantumSeed:
    """Mutate at mutable position k (0-based), tracking the new variable."""
    if not (0 <= k < seed.n_positions) or seed.frozen[k]:
        raise FrozenIndex(f"position {k} is frozen or out of range")
    B, L = seed.B, seed.L
    a_pos, a_neg = exchange_exponents(B, k)
    c_pos = tuple(0 if j == k else max(0, e) for j, e in enumerate(a_pos))
    c_neg = tuple(0 if j == k else max(0, e) for j, e in enumerate(a_neg))

    # twice the scalar exponent making q^w * prod V_i^{c_i} equal X^a * X_k
    def omega2(a):
        return gamma2(a, L) + 2 * sum(a[i] * L[i][k] for i in range(k + 1, len(a)))

    dividend = expand_cluster_monomial(seed, c_pos).scale(
        UFrac.upower(omega2(a_pos))
    ) + expand_cluster_monomial(seed, c_neg).scale(UFrac.upower(omega2(a_neg)))

    try:
        new_var = dividend.right_divide(seed.vars[k])
    except NotDivisible as exc:
        raise LaurentViolation(
            f"exchange at position {k} did not divide exactly: {exc}"
        ) from exc
    if not new_var.is_integer_laurent():
        raise LaurentViolation(
            f"variable at position {k} has non-Laurent coefficients"
        )

    B2, L2 = mutate_BL(B, L, k)
    check_compatible(B2, L2)

    from .builder import relabel_after_exchange  # deferred: builder imports seeds

    if seed.labels[k] is None:
        new_label = None
    else:
        new_label = relabel_after_exchange(seed.labels, B, k)

    labels = list(seed.labels)
    labels[k] = new_label
    vars2 = list(seed.vars)
    vars2[k] = new_var
    return QuantumSeed(
        seed.m,
        seed.n,
        labels,
        seed.frozen,
        B2,
        L2,
        vars2,
        seed.lam0,
        seed.history + (k,),
    )
