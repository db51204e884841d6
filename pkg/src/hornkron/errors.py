"""Exception types raised by the library."""


class HornKronError(ValueError):
    """Base class for all library errors."""


class NotWeaklyDecreasing(HornKronError):
    pass


class NegativePart(HornKronError):
    pass


class AmbientTooSmall(HornKronError):
    pass


class BadIndexSet(HornKronError):
    pass


class SizeMismatch(HornKronError):
    pass


class NonIntegerResult(ArithmeticError):
    """An exact division left a remainder; this indicates a bug, not bad input."""


class BadRange(HornKronError):
    pass


class LengthBoundViolated(HornKronError):
    pass


class EqualityNotSatisfied(HornKronError):
    pass


class CacheValidationError(HornKronError):
    pass
