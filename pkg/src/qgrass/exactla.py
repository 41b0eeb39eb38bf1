"""Small exact linear algebra over the rationals.

Rows are sparse: dictionaries mapping column index to a nonzero Fraction
(plain ints are accepted and upgraded).  Only what the homomorphism-space
computations need: reduced row echelon form, rank, and null space.
"""

from __future__ import annotations

from fractions import Fraction


def _reduce_rows(rows):
    """Return a fully reduced pivot map {pivot column -> unit-pivot row}."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            c = min(row)
            if c in pivots:
                factor = row.pop(c)
                for cc, v in pivots[c].items():
                    if cc == c:
                        continue
                    nv = row.get(cc, 0) - factor * v
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                inv = 1 / row[c]
                pivots[c] = {cc: v * inv for cc, v in row.items()}
                break
    # Back-substitute so each pivot column appears in exactly one row.
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for c2, row2 in pivots.items():
            if c2 == c or c not in row2:
                continue
            factor = row2.pop(c)
            for cc, v in prow.items():
                if cc == c:
                    continue
                nv = row2.get(cc, 0) - factor * v
                if nv:
                    row2[cc] = nv
                else:
                    row2.pop(cc, None)
    return pivots


def rank(rows) -> int:
    return len(_reduce_rows(rows))


def nullspace(rows, ncols: int) -> list[dict[int, Fraction]]:
    """Basis of the solution space of the homogeneous system, as sparse vectors.

    One basis vector per free column f: it has entry 1 at f and entry
    -coeff at each pivot column whose row mentions f.
    """
    pivots = _reduce_rows(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec: dict[int, Fraction] = {f: Fraction(1)}
        for c, row in pivots.items():
            v = row.get(f)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def projection_rank(vectors, coords) -> int:
    """Rank of the given sparse vectors restricted to the listed coordinates."""
    coords = list(coords)
    pos = {c: i for i, c in enumerate(coords)}
    rows = []
    for vec in vectors:
        row = {pos[c]: v for c, v in vec.items() if c in pos and v}
        if row:
            rows.append(row)
    return rank(rows)
