"""Exception types raised by the library."""


class AlgSubshiftError(ValueError):
    """Base class for all library errors."""


class RingMismatchError(AlgSubshiftError):
    pass


class ZeroPolynomialError(AlgSubshiftError):
    pass


class NotAFieldError(AlgSubshiftError):
    pass


class NotUnimodularError(AlgSubshiftError):
    pass


class NotProperError(AlgSubshiftError):
    """A polynomial has negative exponents where a proper polynomial is required."""


class CommonFactorError(AlgSubshiftError):
    """Two polynomials share a factor of positive degree in the eliminated variable."""

    def __init__(self, message, gcd=None):
        super().__init__(message)
        self.gcd = gcd


class UnreachableRegionError(AlgSubshiftError):
    """A configuration source cannot produce values for the requested cells."""


class RegionTooSmallError(AlgSubshiftError):
    pass


class PreconditionError(AlgSubshiftError):
    pass


class ParseError(AlgSubshiftError):
    pass
