"""Exception types raised across the package."""


class PoincareError(Exception):
    """Base class for all package errors."""


class DomainError(PoincareError, ValueError):
    """An argument lies outside the domain where a result is defined."""


class RealRootsError(DomainError):
    """Quadratic has real roots, so it has no polar (r, theta) form."""


class NotPositiveError(DomainError):
    """Polynomial has a real root in (0, inf) and admits no multiplier."""


class DegreeMismatch(DomainError):
    pass


class CertificateFailure(PoincareError, ArithmeticError):
    """A constructed multiplier produced a negative coefficient beyond tolerance."""


class NotRefutable(PoincareError):
    """The sign argument could not exclude the requested degree."""


class SearchExhausted(PoincareError):
    pass


class NonConvergence(PoincareError):
    """Root finder hit its iteration cap. ``roots`` holds the last iterate."""

    def __init__(self, message, roots=None):
        super().__init__(message)
        self.roots = roots
