"""Exception hierarchy shared by every hamorbit module."""


class HamorbitError(ValueError):
    """Base class for all errors raised by this package."""


class EmptyString(HamorbitError):
    pass


class DuplicateLabel(HamorbitError):
    pass


class OutOfRange(HamorbitError):
    pass


class CapExceeded(HamorbitError):
    """Raised when an exhaustive scan is requested above the enumeration cap."""


class LengthMismatch(HamorbitError):
    pass


class ModeMismatch(HamorbitError):
    pass


class TooShort(HamorbitError):
    pass


class SizeMismatch(HamorbitError):
    pass


class NTooSmall(HamorbitError):
    pass


class NegativeInput(HamorbitError):
    pass


class NonPositive(HamorbitError):
    pass


class NotPrime(HamorbitError):
    pass


class POutOfRange(HamorbitError):
    pass


class BadRadius(HamorbitError):
    pass


class InexactDivision(ArithmeticError):
    """A Burnside quotient left a remainder.

    This never happens for correct formulas, so it always points at a bug.
    """
