"""Exception hierarchy shared by every module in the package."""


class GaussQCError(Exception):
    """Base class for all errors raised by gaussqc."""


class ParseError(GaussQCError, ValueError):
    pass


class InvalidField(GaussQCError, ValueError):
    pass


class ZeroInverse(GaussQCError, ZeroDivisionError):
    pass


class OutOfRange(GaussQCError, ValueError):
    pass


class FieldMismatch(GaussQCError, ValueError):
    pass


class LengthMismatch(GaussQCError, ValueError):
    pass


class DivisionByZeroPoly(GaussQCError, ZeroDivisionError):
    pass


class NotADivisor(GaussQCError, ValueError):
    pass


class ZeroCode(GaussQCError, ValueError):
    pass


class NotNested(GaussQCError, ValueError):
    pass


class NotACodeword(GaussQCError, ValueError):
    pass


class NoDecode(GaussQCError):
    pass


class Ambiguous(GaussQCError):
    """Two or more codewords tie at the smallest error weight found."""

    def __init__(self, message, tied, weight):
        super().__init__(message)
        self.tied = tied
        self.weight = weight


class EnumerationTooLarge(GaussQCError):
    """Exhaustive enumeration would exceed the allowed cap.

    ``bound``, when not None, is the smallest weight seen on a partial or
    sampled enumeration; the true minimum is at most this value.  ``lower``,
    when not None, is a weight below which no codeword exists.
    """

    def __init__(self, message, total, cap, bound=None, examined=0, lower=None):
        super().__init__(message)
        self.total = total
        self.cap = cap
        self.bound = bound
        self.examined = examined
        self.lower = lower


class NoLogicalOperators(GaussQCError):
    pass


class CapacityExceeded(EnumerationTooLarge):
    """A full state vector of ``p**n`` amplitudes would exceed the state cap."""


class ShapeMismatch(GaussQCError, ValueError):
    pass


class InternalInvariant(GaussQCError, AssertionError):
    pass
