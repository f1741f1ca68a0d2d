"""Exception hierarchy shared by every module of the package."""


class InnerRatesError(ValueError):
    """Base class for all errors raised by :mod:`innerrates`."""


# exact linear algebra
class SingularMatrix(InnerRatesError):
    pass


class DimensionMismatch(InnerRatesError):
    pass


class NotSymmetric(InnerRatesError):
    pass


# dual graphs
class InvalidGraph(InnerRatesError):
    pass


class UnknownVertex(InnerRatesError, KeyError):
    pass


class UnknownEdge(InnerRatesError, KeyError):
    pass


class TooLarge(InnerRatesError):
    pass


# rate calculus
class NonIntegralMultiplicity(InnerRatesError):
    """Raised when M.m = -L has no positive integral solution."""


class InvalidProfile(InnerRatesError):
    pass


class DisconnectedPoint(InnerRatesError):
    pass


class ZeroPolynomial(InnerRatesError):
    pass


# monomial ideals
class NotPrimary(InnerRatesError):
    pass


class ParseError(InnerRatesError):
    pass


class BoundaryRay(InnerRatesError):
    pass


class InconsistentInvariants(InnerRatesError):
    """The toric engine produced an L or P vector that is not a non-negative integer vector."""


# oracle
class AllJacobiansZero(InnerRatesError):
    pass
