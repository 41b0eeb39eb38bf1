"""Combinatorics of minor labels: crossing, c(I, J), partitions, collections.

A label is an m-element subset of {1, ..., n}, written as a strictly
increasing tuple.  Two labels I, J are *non-crossing* (weakly separated)
when one of the two set differences can be split around the other:

  (i)  J \\ I = J' u J''  with  J' < (I \\ J) < J'',   or
  (ii) I \\ J = I' u I''  with  I' < (J \\ I) < I'',

where A < B means every element of A is below every element of B.  For a
non-crossing pair the quasi-commutation exponent is

  c(I, J) = |J''| - |J'|   (case i)   =   |I'| - |I''|   (case ii),

and the two formulae agree whenever both cases hold.  The exponent is the
one appearing in  D_I D_J = q^{c(I,J)} D_J D_I  for quantum minors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoxOverflow, CrossingPair, InvalidParams, MixedParams


def as_subset(I) -> tuple[int, ...]:
    """Normalise to a strictly increasing tuple of positive integers."""
    t = tuple(sorted(I))
    if len(set(t)) != len(t):
        raise MixedParams(f"repeated elements in subset {I!r}")
    if t and t[0] < 1:
        raise MixedParams(f"subset elements must be >= 1, got {t!r}")
    return t


def check_subset(I, m: int, n: int) -> tuple[int, ...]:
    """Validate I as an m-subset of {1, ..., n}."""
    if not (1 <= m < n):
        raise InvalidParams(f"need 1 <= m < n, got m={m}, n={n}")
    t = as_subset(I)
    if len(t) != m:
        raise MixedParams(f"expected an {m}-subset, got {t!r}")
    if t and t[-1] > n:
        raise MixedParams(f"subset {t!r} exceeds ground set size {n}")
    return t


@dataclass(frozen=True)
class Classification:
    """Outcome of the crossing test for a pair of equal-size labels.

    ``case_i`` holds (J', J'') and ``case_ii`` holds (I', I'') when the
    respective splitting exists; both are None exactly when the pair
    crosses, and then ``c`` is None as well.
    """

    crossing: bool
    case_i: tuple[tuple[int, ...], tuple[int, ...]] | None
    case_ii: tuple[tuple[int, ...], tuple[int, ...]] | None
    c: int | None


def classify_noncrossing(I, J) -> Classification:
    """Classify the pair (I, J); total function, never raises on crossing."""
    I = as_subset(I)
    J = as_subset(J)
    if len(I) != len(J):
        raise MixedParams(f"label sizes differ: {len(I)} vs {len(J)}")
    only_j = sorted(set(J) - set(I))
    only_i = sorted(set(I) - set(J))
    if not only_i:
        # I == J: both splittings are trivially present with empty parts.
        empty = ((), ())
        return Classification(False, empty, empty, 0)

    lo_j = tuple(x for x in only_j if x < only_i[0])
    hi_j = tuple(x for x in only_j if x > only_i[-1])
    case_i = (lo_j, hi_j) if len(lo_j) + len(hi_j) == len(only_j) else None

    lo_i = tuple(x for x in only_i if x < only_j[0])
    hi_i = tuple(x for x in only_i if x > only_j[-1])
    case_ii = (lo_i, hi_i) if len(lo_i) + len(hi_i) == len(only_i) else None

    if case_i is None and case_ii is None:
        return Classification(True, None, None, None)

    c_i = len(hi_j) - len(lo_j) if case_i is not None else None
    c_ii = len(lo_i) - len(hi_i) if case_ii is not None else None
    if c_i is not None and c_ii is not None and c_i != c_ii:
        raise AssertionError(
            f"the two c formulae disagree for I={I}, J={J}: {c_i} vs {c_ii}"
        )
    c = c_i if c_i is not None else c_ii
    return Classification(False, case_i, case_ii, c)


def is_noncrossing(I, J) -> bool:
    return not classify_noncrossing(I, J).crossing


def c_exponent(I, J) -> int:
    """Quasi-commutation exponent c(I, J) of a non-crossing pair."""
    cls = classify_noncrossing(I, J)
    if cls.crossing:
        raise CrossingPair(f"c(I, J) undefined for crossing pair {I!r}, {J!r}")
    return cls.c


def partition_from_subset(I) -> tuple[int, ...]:
    """Partition of the label I = {i_1 < ... < i_m}: part_{m+1-k} = i_k - k.

    Returned with exactly m parts (zeros kept), weakly decreasing.  The
    interval {1, ..., m} maps to the empty (all-zero) partition.
    """
    I = as_subset(I)
    m = len(I)
    parts = [0] * m
    for k, elt in enumerate(I, start=1):
        parts[m - k] = elt - k
    return tuple(parts)


def subset_from_partition(parts, m: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`partition_from_subset` inside the m x (n-m) box."""
    parts = tuple(parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise BoxOverflow(f"parts not weakly decreasing: {parts!r}")
    if len(parts) > m or any(p < 0 or p > n - m for p in parts):
        raise BoxOverflow(f"partition {parts!r} does not fit in {m}x{n - m}")
    padded = parts + (0,) * (m - len(parts))
    return tuple(padded[m - k] + k for k in range(1, m + 1))


def max_diag(outer, inner) -> int:
    """Largest number of boxes of diagram(outer) \\ diagram(inner) on one diagonal.

    Boxes are (row, col) with 1-based indices; the diagonal of a box is
    col - row.  Containment of inner in outer is not required: the count
    is over the set difference of the diagrams.
    """
    outer = tuple(outer)
    inner = tuple(inner)
    counts: dict[int, int] = {}
    for r, width in enumerate(outer, start=1):
        skip = inner[r - 1] if r - 1 < len(inner) else 0
        for col in range(skip + 1, width + 1):
            d = col - r
            counts[d] = counts.get(d, 0) + 1
    return max(counts.values(), default=0)


def cyclic_shift_subset(I, s: int, n: int) -> tuple[int, ...]:
    """Shift every element by s modulo n (ground set {1, ..., n})."""
    return tuple(sorted((x - 1 + s) % n + 1 for x in I))


def cyclic_interval(a: int, m: int, n: int) -> tuple[int, ...]:
    """The m-element cyclic interval {a, a+1, ..., a+m-1} mod n."""
    return tuple(sorted((a - 1 + i) % n + 1 for i in range(m)))


def cyclic_intervals(m: int, n: int) -> list[tuple[int, ...]]:
    return [cyclic_interval(a, m, n) for a in range(1, n + 1)]


def is_ws_collection(labels, n: int | None = None) -> bool:
    """Pairwise non-crossing check; sizes must agree across the collection."""
    labels = [as_subset(I) for I in labels]
    if not labels:
        return True
    m = len(labels[0])
    for I in labels:
        if len(I) != m:
            raise MixedParams("mixed label sizes in collection")
        if n is not None and I and I[-1] > n:
            raise MixedParams(f"label {I!r} exceeds ground set size {n}")
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            if classify_noncrossing(labels[a], labels[b]).crossing:
                return False
    return True


def is_maximal_ws(labels, m: int, n: int) -> bool:
    """Maximal weakly separated collection: pairwise non-crossing of size m(n-m)+1."""
    labels = {check_subset(I, m, n) for I in labels}
    return is_ws_collection(labels, n) and len(labels) == m * (n - m) + 1
