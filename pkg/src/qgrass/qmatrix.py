"""Quantum matrix algebra with straightening, quantum minors, Plücker checks.

The algebra has generators x_ij (row i in 1..m, column j in 1..n) with the
standard homogeneous relations, reading each as a rule for the product
x_ij x_st with (i, j) lexicographically smaller than (s, t):

    x_ij x_st = q x_st x_ij                          same row or same column
    x_ij x_st = x_st x_ij                            i < s, j > t
    x_ij x_st = x_st x_ij + (q - q^-1) x_sj x_it     i < s, j < t

Elements are kept in normal form: sums of words whose generators descend
row-major from left to right, with integer Laurent coefficients in q.
Every rewrite strictly drops the (row-inversions, column-inversions) pair
lexicographically, which is the termination measure; the normal form is
the expansion on the reverse-lexicographic monomial basis.

This module is the independent ground truth against which the
combinatorial exponents c(I, J) and the seed engine's exchange relations
are verified.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import BadConfiguration, IndexOutOfRange, SizeMismatch
from .subsets import as_subset, c_exponent, classify_noncrossing


# -- integer Laurent coefficients in q, as {exponent: coeff} dicts -----------

def ql_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def ql_mul(a: dict, b: dict) -> dict:
    out: dict[int, int] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def ql_neg(a: dict) -> dict:
    return {k: -v for k, v in a.items()}


def ql_shift(a: dict, s: int) -> dict:
    return {k + s: v for k, v in a.items()}


QL_ONE = {0: 1}


class QMatrixElement:
    """Normal-form element: map from descending words to Laurent coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "QuantumMatrixAlgebra", terms: dict):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrixElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((w, tuple(sorted(c.items()))) for w, c in self.terms.items())))

    def __add__(self, other: "QMatrixElement") -> "QMatrixElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = ql_add(out.get(w, {}), c)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return QMatrixElement(self.algebra, out)

    def __neg__(self) -> "QMatrixElement":
        return QMatrixElement(self.algebra, {w: ql_neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "QMatrixElement") -> "QMatrixElement":
        return self.algebra.multiply(self, other)

    def scale_qpow(self, s: int) -> "QMatrixElement":
        return QMatrixElement(self.algebra, {w: ql_shift(c, s) for w, c in self.terms.items()})

    def specialize_q1(self) -> dict:
        """Commutative shadow at q = 1: word -> integer."""
        out = {}
        for w, c in self.terms.items():
            v = sum(c.values())
            if v:
                out[w] = v
        return out

    def content_degrees(self):
        """Multiset of (row content, column content) over words; straightening invariant."""
        out = set()
        for w in self.terms:
            rows = tuple(sorted(g // self.algebra.n for g in w))
            cols = tuple(sorted(g % self.algebra.n for g in w))
            out.add((rows, cols))
        return out


class QuantumMatrixAlgebra:
    """The m x n quantum matrix algebra with memoised straightening."""

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise IndexOutOfRange(f"bad matrix shape {m} x {n}")
        self.m = m
        self.n = n
        self._nf_cache = {"leftmost": {}, "rightmost": {}}
        self._minor_cache: dict[tuple[int, ...], QMatrixElement] = {}

    # -- generator encoding: integer (i-1)*n + (j-1), row-major lex ----------

    def gen(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexOutOfRange(f"x[{i},{j}] outside {self.m} x {self.n}")
        return (i - 1) * self.n + (j - 1)

    def generator(self, i: int, j: int) -> QMatrixElement:
        return QMatrixElement(self, {(self.gen(i, j),): dict(QL_ONE)})

    def zero(self) -> QMatrixElement:
        return QMatrixElement(self, {})

    def one(self) -> QMatrixElement:
        return QMatrixElement(self, {(): dict(QL_ONE)})

    def element(self, word_coeffs: dict) -> QMatrixElement:
        """Normal-form an arbitrary {word: Laurent dict} expression.

        Words are tuples of (i, j) pairs or of encoded integers.
        """
        terms = {}
        for w, c in word_coeffs.items():
            w = tuple(self.gen(*g) if isinstance(g, tuple) else g for g in w)
            for g in w:
                if not (0 <= g < self.m * self.n):
                    raise IndexOutOfRange(f"generator code {g} out of range")
            terms[w] = dict(c)
        return self.normal_form(terms)

    # -- straightening -------------------------------------------------------

    def _rewrite_pair(self, u: int, v: int):
        """Rewrites x_u x_v (ascending: u < v) into descending products."""
        i, j = divmod(u, self.n)
        s, t = divmod(v, self.n)
        if i == s or j == t:
            return (((v, u), {1: 1}),)
        if j > t:
            return (((v, u), {0: 1}),)
        # i < s, j < t: swap plus the (q - q^-1) straightening term
        extra = (s * self.n + j, i * self.n + t)
        return (((v, u), {0: 1}), (extra, {1: 1, -1: -1}))

    def _nf_word(self, w: tuple, strategy: str) -> dict:
        cache = self._nf_cache[strategy]
        hit = cache.get(w)
        if hit is not None:
            return hit
        pos = -1
        rng = range(len(w) - 1)
        if strategy == "rightmost":
            rng = reversed(rng)
        for p in rng:
            if w[p] < w[p + 1]:
                pos = p
                break
        if pos < 0:
            res = {w: dict(QL_ONE)}
        else:
            acc: dict[tuple, dict] = {}
            for pair, cf in self._rewrite_pair(w[pos], w[pos + 1]):
                w2 = w[:pos] + pair + w[pos + 2:]
                for w3, c3 in self._nf_word(w2, strategy).items():
                    s = ql_add(acc.get(w3, {}), ql_mul(cf, c3))
                    if s:
                        acc[w3] = s
                    else:
                        acc.pop(w3, None)
            res = acc
        cache[w] = res
        return res

    def normal_form(self, terms: dict, strategy: str = "leftmost") -> QMatrixElement:
        out: dict[tuple, dict] = {}
        for w, c in terms.items():
            for w2, c2 in self._nf_word(tuple(w), strategy).items():
                s = ql_add(out.get(w2, {}), ql_mul(c, c2))
                if s:
                    out[w2] = s
                else:
                    out.pop(w2, None)
        return QMatrixElement(self, out)

    def multiply(self, a: QMatrixElement, b: QMatrixElement) -> QMatrixElement:
        out: dict[tuple, dict] = {}
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                c = ql_mul(ca, cb)
                for w2, c2 in self._nf_word(wa + wb, "leftmost").items():
                    s = ql_add(out.get(w2, {}), ql_mul(c, c2))
                    if s:
                        out[w2] = s
                    else:
                        out.pop(w2, None)
        return QMatrixElement(self, out)

    # -- quantum minors --------------------------------------------------------

    def quantum_minor(self, I) -> QMatrixElement:
        """Minor on rows 1..m and the m columns of I: sum over S_m of
        (-q)^{l(sigma)} x_{1, i_sigma(1)} ... x_{m, i_sigma(m)}, normal-formed."""
        I = as_subset(I)
        if len(I) != self.m:
            raise SizeMismatch(f"minor label {I!r} must have size {self.m}")
        if I[-1] > self.n:
            raise IndexOutOfRange(f"label {I!r} exceeds {self.n} columns")
        cached = self._minor_cache.get(I)
        if cached is not None:
            return cached
        terms = {}
        for sigma in permutations(range(self.m)):
            inv = sum(
                1
                for a in range(self.m)
                for b in range(a + 1, self.m)
                if sigma[a] > sigma[b]
            )
            word = tuple(self.gen(r + 1, I[sigma[r]]) for r in range(self.m))
            terms[word] = {inv: (-1) ** inv}
        minor = self.normal_form(terms)
        self._minor_cache[I] = minor
        return minor

    # -- quasi-commutation --------------------------------------------------------

    def quasi_comm_exponent(self, a: QMatrixElement, b: QMatrixElement):
        """c with a*b == q^c * b*a termwise, or None if they do not quasi-commute."""
        ab = self.multiply(a, b)
        ba = self.multiply(b, a)
        if not ab and not ba:
            return 0
        if set(ab.terms) != set(ba.terms):
            return None
        word = next(iter(ab.terms))
        cab = ab.terms[word]
        cba = ba.terms[word]
        shift = min(cab) - min(cba)
        for w, c in ab.terms.items():
            if ql_shift(ba.terms[w], shift) != c:
                return None
        return shift

    # -- quantum Plücker relations ---------------------------------------------

    def verify_short_plucker(self, J, a: int, b: int, c: int, d: int) -> bool:
        """Check the short quantum Plücker relation for the labels J+{a,b,c,d}.

        The four indices must be cyclically ordered and disjoint from J.
        With the inverted minor cleared, the two linear configurations read

            a<b<c<d:  D_Jac D_Jbd = q^-1 D_Jab D_Jcd + q D_Jad D_Jbc
            d<a<b<c:  D_Jbd D_Jac = q^-1 D_Jad D_Jbc + q D_Jcd D_Jab
        """
        J = as_subset(J)
        quad = (a, b, c, d)
        if len(set(quad)) != 4 or set(J) & set(quad):
            raise BadConfiguration(f"indices {quad} must be distinct and avoid J={J}")
        if len(J) != self.m - 2:
            raise BadConfiguration(f"|J| must be {self.m - 2}, got {len(J)}")
        # rotate by two so that a < c (this preserves all five labels)
        if a > c:
            a, b, c, d = c, d, a, b
        if not (a < b < c and (d > c or d < a)):
            raise BadConfiguration(f"indices {quad} are not cyclically ordered")

        def minor(*extra):
            return self.quantum_minor(J + tuple(extra))

        if d > c:
            lhs = minor(a, c) * minor(b, d)
            rhs = (minor(a, b) * minor(c, d)).scale_qpow(-1) + (
                minor(a, d) * minor(b, c)
            ).scale_qpow(1)
        else:
            lhs = minor(b, d) * minor(a, c)
            rhs = (minor(a, d) * minor(b, c)).scale_qpow(-1) + (
                minor(c, d) * minor(a, b)
            ).scale_qpow(1)
        return lhs == rhs

    # -- bulk verification ----------------------------------------------------------

    def verify_lz(self) -> dict:
        """Compare oracle quasi-commutation with the combinatorial exponent.

        For every unordered pair of distinct m-subsets: the minors
        quasi-commute iff the labels are non-crossing, and then the
        exponent equals both c(I, J) and the kappa-difference lambda(I, J).
        """
        from .rankone import lambda_pair

        labels = list(combinations(range(1, self.n + 1), self.m))
        violations = []
        pairs = 0
        for x in range(len(labels)):
            for y in range(x + 1, len(labels)):
                I, Jl = labels[x], labels[y]
                pairs += 1
                got = self.quasi_comm_exponent(
                    self.quantum_minor(I), self.quantum_minor(Jl)
                )
                cls = classify_noncrossing(I, Jl)
                if cls.crossing:
                    expected = None
                else:
                    expected = c_exponent(I, Jl)
                    lam = lambda_pair(I, Jl, self.n)
                    if lam != expected:
                        violations.append(
                            {"I": list(I), "J": list(Jl), "expected": expected, "got": f"lambda={lam}"}
                        )
                if got != expected:
                    violations.append(
                        {"I": list(I), "J": list(Jl), "expected": expected, "got": got}
                    )
        return {"pairs": pairs, "violations": violations}
