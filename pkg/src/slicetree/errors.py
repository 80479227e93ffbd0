"""Domain error hierarchy shared by all modules."""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all domain-level failures (CLI exit code 1)."""

    def payload(self) -> dict:
        return {"error": type(self).__name__, "detail": str(self)}


class FracLatticeError(DomainError):
    """A rational left the denominator-divides-12 lattice."""


class MarkingNotInTable(DomainError):
    """Marking value has no Kodaira type in the slicing table."""


class InvalidTree(DomainError):
    """Operation requires a valid sliced tree and validation failed."""


class UnknownVertex(DomainError):
    """Vertex id not present in the tree."""


class NonPositiveTotalWeight(DomainError):
    """Total weight <= 0; pruning cannot reach a stable tree (height <= 2)."""


class MarkingOutsideTable(DomainError):
    """A pruning step produced t outside {0, 1} and the klt table."""


class InvalidOrder(DomainError):
    """User-supplied pruning order names a non-leaf or positive-weight leaf."""


class CapExceeded(DomainError):
    """Enumeration hit a safety cap. Carries the partial census."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class DegenerateCurve(DomainError):
    """Flip bookkeeping requires a curve with negative self-intersection."""


class HeightTooSmall(DomainError):
    """Formula is only defined for height n >= 3."""


class EpsilonOutOfRange(DomainError):
    """epsilon must lie in the open interval (0, (n-2)/n)."""


class NotLC(DomainError):
    """Profile has a non-lc point; factorization undefined."""


class InconsistentOrders(DomainError):
    """Vanishing orders match no row of the Kodaira-Tate table."""
