"""Initial rectangle seed for Gr(m, n), relabelling, and exchange-graph search.

The initial maximal weakly separated collection consists of the labels of
rectangle partitions: grid position (i, j), for 1 <= i <= m and
1 <= j <= n-m, carries the label of the i x j rectangle, and a base
position carries {1, ..., m}.  Positions with i = m, j = n-m, or the base
are frozen; they are exactly the n cyclic intervals.  The quiver has
arrows (i, j+1) -> (i, j), (i+1, j) -> (i, j), (i, j) -> (i+1, j+1)
whenever both endpoints exist (arrows between two frozen positions are
dropped; they never enter B), plus (1, 1) -> base.  This orientation is
the one for which B^t L is +2 times the identity block; the mirror
orientation fails the construction-time compatibility assertion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import CrossingPair, InvalidParams, NoLabel
from .seeds import QuantumSeed, check_compatible, mutate_seed
from .subsets import (
    as_subset,
    classify_noncrossing,
    cyclic_intervals,
    subset_from_partition,
)
from .torus import TorusElement


def rectangle_label(i: int, j: int, m: int, n: int) -> tuple[int, ...]:
    """Label of the i x j rectangle partition inside the m x (n-m) box."""
    return subset_from_partition((j,) * i, m, n)


def L_from_labels(labels) -> tuple[tuple[int, ...], ...]:
    """Quasi-commutation matrix with entries c(I_i, I_j); labels must be
    pairwise non-crossing."""
    labels = [as_subset(l) for l in labels]
    N = len(labels)
    L = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            cls = classify_noncrossing(labels[i], labels[j])
            if cls.crossing:
                raise CrossingPair(
                    f"labels {labels[i]!r} and {labels[j]!r} cross"
                )
            L[i][j] = cls.c
            L[j][i] = -cls.c
    return tuple(tuple(r) for r in L)


def initial_seed(m: int, n: int) -> QuantumSeed:
    """The rectangle seed of Gr(m, n), with unit-monomial variables."""
    if not (1 <= m < n):
        raise InvalidParams(f"need 1 <= m < n, got m={m}, n={n}")
    mutable = [(i, j) for i in range(1, m) for j in range(1, n - m)]
    # frozen, ordered by the start of the corresponding cyclic interval
    frozen_grid = [("base", None)]
    frozen_grid += [(m, j) for j in range(1, n - m + 1)]
    frozen_grid += [(i, n - m) for i in range(m - 1, 0, -1)]
    positions = mutable + frozen_grid

    index = {p: idx for idx, p in enumerate(positions)}
    labels = []
    for p in positions:
        if p == ("base", None):
            labels.append(tuple(range(1, m + 1)))
        else:
            labels.append(rectangle_label(p[0], p[1], m, n))

    N = len(positions)
    M = len(mutable)
    B = [[0] * M for _ in range(N)]

    def add_arrow(src, dst):
        if src not in index or dst not in index:
            return
        si, di = index[src], index[dst]
        if si >= M and di >= M:
            return  # arrows between frozen positions never enter B
        if si < M:
            B[di][si] += 1
        if di < M:
            B[si][di] -= 1

    for i in range(1, m + 1):
        for j in range(1, n - m + 1):
            add_arrow((i, j + 1), (i, j))
            add_arrow((i + 1, j), (i, j))
            add_arrow((i, j), (i + 1, j + 1))
    add_arrow((1, 1), ("base", None))

    L = L_from_labels(labels)
    d = check_compatible(tuple(tuple(r) for r in B), L)
    assert all(x == 2 for x in d), f"rectangle seed of Gr({m},{n}) gave d = {d}"

    variables = [TorusElement.unit_variable(L, i) for i in range(N)]
    frozen_flags = [False] * M + [True] * (N - M)
    return QuantumSeed(m, n, labels, frozen_flags, B, L, variables, L)


def arrows_from_B(B) -> list[tuple[int, int]]:
    """Arrow list (src, dst) recoverable from B, with multiplicity."""
    out = []
    N = len(B)
    M = len(B[0]) if B and B[0] else 0
    for k in range(M):
        for j in range(N):
            v = B[j][k]
            if v > 0 and (j >= M or j > k):
                out.extend([(k, j)] * v)
            elif v < 0 and (j >= M or j > k):
                out.extend([(j, k)] * (-v))
    return sorted(out)


def relabel_after_exchange(labels, B, k: int):
    """New minor label after a geometric exchange at k, or None.

    A mutation is a geometric exchange when column k of B splits the
    neighbours into two pairs {Jab, Jcd} versus {Jad, Jbc} with common
    intersection J, the four extra indices {a, b, c, d} cyclically
    ordered, and the label at k equal to J + one diagonal {a, c}; the new
    label is J + the other diagonal {b, d}.  Any other pattern returns
    None: the mutation is still legal, its variable is just not a minor.
    """
    if labels[k] is None:
        raise NoLabel(f"position {k} carries no label")
    col = [B[j][k] for j in range(len(B))]
    plus = [j for j in range(len(col)) for _ in range(max(0, col[j]))]
    minus = [j for j in range(len(col)) for _ in range(max(0, -col[j]))]
    if len(plus) != 2 or len(minus) != 2:
        return None
    if len(set(plus)) != 2 or len(set(minus)) != 2:
        return None
    quad_labels = [labels[j] for j in plus + minus]
    if any(l is None for l in quad_labels):
        return None
    A1, A2, B1, B2 = (set(l) for l in quad_labels)
    J = A1 & A2
    U = A1 | A2
    if B1 & B2 != J or B1 | B2 != U:
        return None
    extras = sorted(U - J)
    if len(extras) != 4:
        return None
    here = set(labels[k])
    if not (J <= here <= U):
        return None
    w, x, y, z = extras
    diag = here - J
    if diag not in ({w, y}, {x, z}):
        return None
    # the two sides must realise the two adjacent pairings of (w, x, y, z)
    adjacent = ({frozenset((w, x)), frozenset((y, z))},
                {frozenset((w, z)), frozenset((x, y))})
    side_a = {frozenset(A1 - J), frozenset(A2 - J)}
    side_b = {frozenset(B1 - J), frozenset(B2 - J)}
    if {frozenset(map(tuple, side_a)), frozenset(map(tuple, side_b))} != {
        frozenset(map(tuple, adjacent[0])),
        frozenset(map(tuple, adjacent[1])),
    }:
        return None
    other_diag = set(extras) - diag
    return tuple(sorted(J | other_diag))


def exchange_quad(labels, B, k: int):
    """The (J, a, b, c, d) data of a geometric exchange at k, or None.

    (a, b, c, d) is returned cyclically ordered with the label at k equal
    to J + {a, c}; this is the configuration fed to the quantum Plücker
    verification.
    """
    new_label = relabel_after_exchange(labels, B, k)
    if new_label is None:
        return None
    here = set(labels[k])
    J = here & set(new_label)
    extras = sorted((here | set(new_label)) - J)
    w, x, y, z = extras
    if here - J == {w, y}:
        quad = (w, x, y, z)
    else:
        quad = (x, y, z, w)
    return tuple(sorted(J)), quad


@dataclass
class ExploreSummary:
    seeds: int
    labels: list
    depth: int
    truncated: bool

    def to_json_dict(self) -> dict:
        return {
            "seeds": self.seeds,
            "labels": [list(l) for l in self.labels],
            "truncated": self.truncated,
            "depth": self.depth,
        }


def _seed_key(seed: QuantumSeed):
    if all(l is not None for l in seed.labels):
        return frozenset(seed.labels)
    parts = []
    for l, v in zip(seed.labels, seed.vars):
        parts.append(("label", l) if l is not None else ("var", v.canonical_key()))
    return tuple(sorted(parts))


def explore_exchange_graph(
    m: int,
    n: int,
    max_seeds: int | None = None,
    max_depth: int | None = None,
    geometric_only: bool = True,
    start: QuantumSeed | None = None,
) -> ExploreSummary:
    """Breadth-first search of the exchange graph from the rectangle seed.

    Seeds are deduplicated by label set (or by variable fingerprints at
    unlabelled positions).  Whenever a known seed is reached again along a
    different path, its per-label variable expansions are checked against
    the stored representative, so exploration doubles as a
    well-definedness test of the variable engine.
    """
    if (max_seeds is not None and max_seeds < 1) or (
        max_depth is not None and max_depth < 0
    ):
        raise InvalidParams("resource bounds must be positive")
    root = initial_seed(m, n) if start is None else start
    seen: dict = {_seed_key(root): root}
    labels_seen = {
        l for l, f in zip(root.labels, root.frozen) if not f and l is not None
    }
    queue = deque([(root, 0)])
    depth_reached = 0
    truncated = False

    def has_unseen_move(seed: QuantumSeed) -> bool:
        # geometric moves let us predict the child's label set cheaply
        for k in range(seed.n_mutable):
            if seed.labels[k] is None:
                return True
            new_label = relabel_after_exchange(seed.labels, seed.B, k)
            if new_label is None:
                if not geometric_only:
                    return True
                continue
            prospective = list(seed.labels)
            prospective[k] = new_label
            if frozenset(prospective) not in seen:
                return True
        return False

    while queue:
        seed, depth = queue.popleft()
        if max_depth is not None and depth >= max_depth:
            if has_unseen_move(seed):
                truncated = True
            continue
        for k in range(seed.n_mutable):
            if geometric_only and relabel_after_exchange(seed.labels, seed.B, k) is None:
                continue
            child = mutate_seed(seed, k)
            key = _seed_key(child)
            known = seen.get(key)
            if known is not None:
                _check_same_variables(known, child)
                continue
            if max_seeds is not None and len(seen) >= max_seeds:
                truncated = True
                continue
            seen[key] = child
            queue.append((child, depth + 1))
            depth_reached = max(depth_reached, depth + 1)
            for l, f in zip(child.labels, child.frozen):
                if not f and l is not None:
                    labels_seen.add(l)
    return ExploreSummary(
        seeds=len(seen),
        labels=sorted(labels_seen),
        depth=depth_reached,
        truncated=truncated,
    )


def _check_same_variables(a: QuantumSeed, b: QuantumSeed):
    """Two seeds with one label set must expand each label identically."""
    if any(l is None for l in a.labels) or any(l is None for l in b.labels):
        return
    va = dict(zip(a.labels, a.vars))
    vb = dict(zip(b.labels, b.vars))
    for label, var in vb.items():
        if va[label] != var:
            raise AssertionError(
                f"variable for label {label} differs between mutation paths"
            )


# -- classical oracles ---------------------------------------------------------

def classical_plucker_eval(matrix, I) -> Fraction:
    """Exact minor of the listed columns (1-based) of an m x n matrix."""
    I = as_subset(I)
    rows = [[Fraction(matrix[r][c - 1]) for c in I] for r in range(len(I))]
    # forward elimination with exact rationals
    det = Fraction(1)
    size = len(I)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    return det


def frozen_cyclic_order(m: int, n: int) -> list[tuple[int, ...]]:
    """The n frozen labels in cyclic-interval order (sanity helper)."""
    return cyclic_intervals(m, n)
