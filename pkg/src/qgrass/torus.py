"""Based quantum torus over a skew-symmetric integer matrix.

Generators X_1, ..., X_N quasi-commute by X_i X_j = q^{L_ij} X_j X_i.
Elements are stored on the based-monomial basis

    X^a = q^{gamma(a)} X_1^{a_1} ... X_N^{a_N},
    gamma(a) = (1/2) sum_{i>j} a_i a_j L_ij,

for which the product rule is

    X^a X^b = q^{(1/2) sum_{i>j} (a_i b_j - b_i a_j) L_ij} X^{a+b}.

Scalars are :class:`~qgrass.upoly.UFrac` values in u = q^{1/2}, so every
q-power above is an even or odd power of u and all arithmetic is exact.
Exact right division (the engine of Laurent-expansion mutation) works by
leading-term elimination inside the coordinate-wise support box forced by
the graded-domain property: extreme grades of a product never cancel, so
max_i supp(Q) = max_i supp(P) - max_i supp(D) and likewise for min.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    AmbientMismatch,
    DimMismatch,
    NotDivisible,
    ZeroValueAtNegativeExponent,
)
from .upoly import UFrac


def _check_dim(a, lam):
    if len(a) != len(lam):
        raise DimMismatch(f"exponent length {len(a)} vs ambient rank {len(lam)}")


def gamma2(a, lam) -> int:
    """Twice the monomial normalisation exponent: sum_{i>j} a_i a_j L_ij."""
    _check_dim(a, lam)
    total = 0
    for i in range(len(a)):
        ai = a[i]
        if not ai:
            continue
        row = lam[i]
        for j in range(i):
            if a[j]:
                total += ai * a[j] * row[j]
    return total


def gamma(a, lam) -> Fraction:
    """The exact half-integer gamma(a)."""
    return Fraction(gamma2(a, lam), 2)


def mul_monomials2(a, b, lam) -> tuple[int, tuple[int, ...]]:
    """Twice the q-exponent of X^a X^b, and the exponent sum a+b."""
    _check_dim(a, lam)
    _check_dim(b, lam)
    total = 0
    for i in range(len(a)):
        row = lam[i]
        ai = a[i]
        bi = b[i]
        if not ai and not bi:
            continue
        for j in range(i):
            if a[j] or b[j]:
                total += (ai * b[j] - bi * a[j]) * row[j]
    return total, tuple(x + y for x, y in zip(a, b))


def mul_monomials(a, b, lam) -> tuple[Fraction, tuple[int, ...]]:
    s2, e = mul_monomials2(a, b, lam)
    return Fraction(s2, 2), e


class TorusElement:
    """Finite sum of based monomials with UFrac coefficients."""

    __slots__ = ("lam", "terms")

    def __init__(self, lam, terms=None):
        self.lam = lam
        self.terms: dict[tuple[int, ...], UFrac] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    _check_dim(e, lam)
                    self.terms[tuple(e)] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, lam) -> "TorusElement":
        return cls(lam)

    @classmethod
    def one(cls, lam) -> "TorusElement":
        return cls.monomial(lam, (0,) * len(lam))

    @classmethod
    def monomial(cls, lam, exps, coeff: UFrac | None = None) -> "TorusElement":
        coeff = UFrac.from_int(1) if coeff is None else coeff
        return cls(lam, {tuple(exps): coeff})

    @classmethod
    def unit_variable(cls, lam, i: int) -> "TorusElement":
        e = [0] * len(lam)
        e[i] = 1
        return cls.monomial(lam, e)

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _require_same_ambient(self, other: "TorusElement"):
        if self.lam is not other.lam and self.lam != other.lam:
            raise AmbientMismatch("torus elements over different L matrices")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.lam == other.lam and self.terms == other.terms

    def __hash__(self):
        return hash(self.canonical_key())

    def canonical_key(self):
        return tuple(sorted((e, c.upow, c.num, c.den) for e, c in self.terms.items()))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._require_same_ambient(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = TorusElement(self.lam)
        res.terms = out
        return res

    def __neg__(self) -> "TorusElement":
        res = TorusElement(self.lam)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def scale(self, coeff: UFrac) -> "TorusElement":
        res = TorusElement(self.lam)
        if coeff:
            res.terms = {e: c * coeff for e, c in self.terms.items()}
        return res

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        self._require_same_ambient(other)
        lam = self.lam
        out: dict[tuple[int, ...], UFrac] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                s2, e = mul_monomials2(a, b, lam)
                c = ca * cb * UFrac.upower(s2)
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = TorusElement(lam)
        res.terms = out
        return res

    # -- division ------------------------------------------------------------

    def right_divide(self, divisor: "TorusElement") -> "TorusElement":
        """Exact Q with Q * divisor == self; NotDivisible when none exists."""
        self._require_same_ambient(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("right division by zero")
        if not self.terms:
            return TorusElement.zero(self.lam)

        N = len(self.lam)
        him = [max(e[i] for e in self.terms) for i in range(N)]
        lom = [min(e[i] for e in self.terms) for i in range(N)]
        hid = [max(e[i] for e in divisor.terms) for i in range(N)]
        lod = [min(e[i] for e in divisor.terms) for i in range(N)]
        hi = [him[i] - hid[i] for i in range(N)]
        lo = [lom[i] - lod[i] for i in range(N)]
        if any(hi[i] < lo[i] for i in range(N)):
            raise NotDivisible("support box is empty")

        lead_d = max(divisor.terms)
        lead_c = divisor.terms[lead_d]
        rem = dict(self.terms)
        quo: dict[tuple[int, ...], UFrac] = {}
        while rem:
            lead_r = max(rem)
            e = tuple(x - y for x, y in zip(lead_r, lead_d))
            if any(e[i] < lo[i] or e[i] > hi[i] for i in range(N)):
                raise NotDivisible(
                    f"required quotient monomial {e} leaves the support box"
                )
            s2, _ = mul_monomials2(e, lead_d, self.lam)
            coef = rem[lead_r] / (lead_c * UFrac.upower(s2))
            prev = quo.get(e)
            quo[e] = coef if prev is None else prev + coef
            for d, cd in divisor.terms.items():
                s2b, ee = mul_monomials2(e, d, self.lam)
                c = coef * cd * UFrac.upower(s2b)
                s = rem.get(ee)
                s = -c if s is None else s - c
                if s:
                    rem[ee] = s
                else:
                    rem.pop(ee, None)
        res = TorusElement(self.lam)
        res.terms = {e: c for e, c in quo.items() if c}
        return res

    # -- specialisation -------------------------------------------------------

    def is_integer_laurent(self) -> bool:
        return all(c.is_integer_laurent() for c in self.terms.values())

    def specialize_q1(self) -> dict[tuple[int, ...], Fraction]:
        """Evaluate every coefficient at u = 1 (PoleAtOne on failure)."""
        return {e: c.eval_at_one() for e, c in self.terms.items()}

    def evaluate_classical(self, values) -> Fraction:
        """Substitute commuting numeric values for the variables after q -> 1."""
        values = [Fraction(v) for v in values]
        _check_dim(values, self.lam)
        total = Fraction(0)
        for e, c in self.terms.items():
            prod = c.eval_at_one()
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                if values[i] == 0 and exp < 0:
                    raise ZeroValueAtNegativeExponent(
                        f"value at position {i} is zero but exponent is {exp}"
                    )
                prod *= values[i] ** exp
            total += prod
        return total

    # -- serialisation ----------------------------------------------------------

    def serialize(self) -> list[dict]:
        return [
            {"exponents": list(e), "coeff": c.canonical_str()}
            for e, c in sorted(self.terms.items())
        ]

    def __repr__(self) -> str:
        if not self.terms:
            return "TorusElement(0)"
        bits = [f"{c.canonical_str()}·X^{list(e)}" for e, c in sorted(self.terms.items())]
        return "TorusElement(" + " + ".join(bits) + ")"
