"""Integer polynomials in u and their fraction field, with u = q^(1/2).

Polynomials are tuples of int coefficients indexed by degree, trailing
zeros stripped; () is zero.  A :class:`UFrac` is a scalar of the form

    u^upow * num(u) / den(u)

kept in a unique canonical form: num and den are integer polynomials with
nonzero constant terms (all u factors pulled into upow), gcd(num, den) = 1,
the integer contents of num and den are coprime, and den has positive
leading coefficient.  Integer Laurent scalars are exactly those with
den == (1,).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import PoleAtOne

Poly = tuple  # alias for readability


def pstrip(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return pstrip(out)


def pneg(a: Poly) -> Poly:
    return tuple(-v for v in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                if bv:
                    out[i + j] += av * bv
    return pstrip(out)


def pshift(a: Poly, k: int) -> Poly:
    """Multiply by u^k, k >= 0."""
    return ((0,) * k + tuple(a)) if a else ()


def pcontent(a: Poly) -> int:
    g = 0
    for v in a:
        g = gcd(g, abs(v))
    return g


def pdivmod_frac(a, b):
    """Euclidean division over the rationals; returns Fraction tuples."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(v) for v in a]
    quo = [Fraction(0)] * max(0, len(rem) - len(b) + 1)
    db = len(b) - 1
    lb = Fraction(b[-1])
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        coef = rem[-1] / lb
        quo[shift] = coef
        for i, bv in enumerate(b):
            rem[shift + i] -= coef * bv
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


def pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Exact division in Z[u]; raises if b does not divide a."""
    quo, rem = pdivmod_frac(a, b)
    if any(rem):
        raise ArithmeticError(f"{b} does not divide {a}")
    out = []
    for v in quo:
        if v.denominator != 1:
            raise ArithmeticError(f"non-integer quotient dividing {a} by {b}")
        out.append(int(v))
    return pstrip(out)


def pprimitive(a: Poly) -> Poly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(v // g for v in a)


def pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[u] (positive leading coefficient); (1,) if coprime."""
    a = pprimitive(a)
    b = pprimitive(b)
    while b:
        _, rem = pdivmod_frac(a, b)
        if not any(rem):
            return b
        # rescale the rational remainder back to a primitive integer poly
        denlcm = 1
        for v in rem:
            denlcm = denlcm * v.denominator // gcd(denlcm, v.denominator)
        a, b = b, pprimitive(tuple(int(v * denlcm) for v in rem))
    return a if a else ()


def peval_one(a: Poly) -> int:
    return sum(a)


def _poly_str(a: Poly) -> str:
    if not a:
        return "0"
    out = ""
    for d, v in enumerate(a):
        if not v:
            continue
        sign = "-" if v < 0 else ("+" if out else "")
        mag = abs(v)
        if d == 0:
            body = str(mag)
        else:
            pw = "u" if d == 1 else f"u^{d}"
            body = pw if mag == 1 else f"{mag}{pw}"
        out += sign + body
    return out


class UFrac:
    """Element of the fraction field of Z[u], canonically normalised."""

    __slots__ = ("upow", "num", "den")

    def __init__(self, upow: int = 0, num=(1,), den=(1,)):
        num = pstrip(num)
        den = pstrip(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.upow, self.num, self.den = 0, (), (1,)
            return
        # pull u factors into upow
        i = 0
        while num[i] == 0:
            i += 1
        j = 0
        while den[j] == 0:
            j += 1
        upow += i - j
        num = num[i:]
        den = den[j:]
        if den != (1,):
            g = pgcd(num, den)
            if g != (1,):
                num = pdiv_exact(num, g)
                den = pdiv_exact(den, g)
            cg = gcd(pcontent(num), pcontent(den))
            if den[-1] < 0:
                cg = -cg
            if cg != 1:
                num = tuple(v // cg for v in num)
                den = tuple(v // cg for v in den)
        self.upow, self.num, self.den = upow, num, den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, k: int) -> "UFrac":
        return cls(0, (k,), (1,))

    @classmethod
    def upower(cls, k: int, coeff: int = 1) -> "UFrac":
        """coeff * u^k; with u^2 = q this encodes integer powers of q^(1/2)."""
        return cls(k, (coeff,), (1,))

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_integer_laurent(self) -> bool:
        return self.den == (1,)

    def is_one(self) -> bool:
        return self.upow == 0 and self.num == (1,) and self.den == (1,)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "UFrac") -> "UFrac":
        if not other:
            return self
        if not self:
            return other
        base = min(self.upow, other.upow)
        a = pshift(self.num, self.upow - base)
        b = pshift(other.num, other.upow - base)
        if self.den == other.den:
            return UFrac(base, padd(a, b), self.den)
        num = padd(pmul(a, other.den), pmul(b, self.den))
        return UFrac(base, num, pmul(self.den, other.den))

    def __neg__(self) -> "UFrac":
        if not self:
            return self
        out = UFrac.__new__(UFrac)
        out.upow, out.num, out.den = self.upow, pneg(self.num), self.den
        return out

    def __sub__(self, other: "UFrac") -> "UFrac":
        return self + (-other)

    def __mul__(self, other: "UFrac") -> "UFrac":
        if not self or not other:
            return UFrac.zero()
        return UFrac(
            self.upow + other.upow, pmul(self.num, other.num), pmul(self.den, other.den)
        )

    def __truediv__(self, other: "UFrac") -> "UFrac":
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if not self:
            return self
        return UFrac(
            self.upow - other.upow, pmul(self.num, other.den), pmul(self.den, other.num)
        )

    _zero = None

    @classmethod
    def zero(cls) -> "UFrac":
        if cls._zero is None:
            cls._zero = cls(0, (), (1,))
        return cls._zero

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, UFrac):
            return NotImplemented
        return (
            self.num == other.num
            and self.den == other.den
            and (self.upow == other.upow or not self.num)
        )

    def __hash__(self):
        if not self.num:
            return hash(("UFrac", 0))
        return hash(("UFrac", self.upow, self.num, self.den))

    # -- evaluation / display ----------------------------------------------

    def eval_at_one(self) -> Fraction:
        """Specialise u -> 1 exactly; PoleAtOne if the reduced denominator vanishes."""
        dv = peval_one(self.den)
        if dv == 0:
            raise PoleAtOne(f"{self} has a pole at u = 1")
        return Fraction(peval_one(self.num), dv)

    def laurent_terms(self) -> dict[int, int]:
        """Exponent -> coefficient map; requires an integer Laurent scalar."""
        if not self.is_integer_laurent():
            raise ArithmeticError(f"{self} is not integer Laurent")
        return {self.upow + d: v for d, v in enumerate(self.num) if v}

    def canonical_str(self) -> str:
        return f"u^{self.upow}·({_poly_str(self.num)})/({_poly_str(self.den)})"

    def __repr__(self) -> str:
        return f"UFrac({self.canonical_str()})"
