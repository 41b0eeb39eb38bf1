"""Exception types used across the package.

Every error raised on purpose by qgrass derives from :class:`QGrassError`,
so callers can catch one base class at interface boundaries (CLI, HTTP).
"""


class QGrassError(Exception):
    """Base class for all qgrass errors."""


class InvalidParams(QGrassError):
    """Grassmannian parameters must satisfy 1 <= m < n."""


class MixedParams(QGrassError):
    """Subsets of different sizes (or out of range) were mixed in one call."""


class CrossingPair(QGrassError):
    """A quasi-commutation exponent was requested for a crossing pair."""


class BoxOverflow(QGrassError):
    """A partition does not fit in the m x (n-m) box."""


class SizeMismatch(QGrassError):
    """Two subsets were expected to have equal size."""


class TruncationTooSmall(QGrassError):
    """The truncation order of the scalar ring must exceed the cycle length."""


class DimMismatch(QGrassError):
    """Exponent vector length does not match the ambient rank."""


class AmbientMismatch(QGrassError):
    """Two torus elements live over different quasi-commutation matrices."""


class NotDivisible(QGrassError):
    """Exact right division failed; the dividend is not a multiple."""


class PoleAtOne(QGrassError):
    """A coefficient has a pole at u = 1 and cannot be specialised."""


class ZeroValueAtNegativeExponent(QGrassError):
    """A zero value was substituted into a negative exponent."""


class NotCompatible(QGrassError):
    """The pair (B, L) violates the compatibility condition."""

    def __init__(self, k, l, value):
        super().__init__(
            f"B^t L fails compatibility at (k={k}, l={l}): got {value}"
        )
        self.k = k
        self.l = l
        self.value = value


class FrozenIndex(QGrassError):
    """Mutation was requested at a frozen position."""


class LaurentViolation(QGrassError):
    """A cluster variable failed to be an integer Laurent torus element.

    This would contradict the quantum Laurent phenomenon; it always means an
    internal inconsistency, never a legitimate runtime state.
    """


class NoLabel(QGrassError):
    """Relabelling was requested at a position with no minor label."""


class IndexOutOfRange(QGrassError):
    """A quantum matrix generator index is outside the m x n grid."""


class BadConfiguration(QGrassError):
    """The four exchange indices are not cyclically ordered / disjoint from J."""
