"""Exception hierarchy.

Every error raised deliberately by the package derives from :class:`MapentError`
and also from the closest builtin, so callers may catch either.
"""


class MapentError(Exception):
    pass


class LengthMismatchError(MapentError, ValueError):
    pass


class ZeroVectorError(MapentError, ValueError):
    pass


class NotNormalizedError(MapentError, ValueError):
    pass


class DigitOutOfRangeError(MapentError, ValueError):
    pass


class IndexOutOfRangeError(MapentError, IndexError):
    pass


class BudgetExceededError(MapentError, MemoryError):
    pass


class InvalidPermutationError(MapentError, ValueError):
    pass


class InvalidBipartitionError(MapentError, ValueError):
    pass


class InvalidDimsError(MapentError, ValueError):
    pass


class ConvergenceFailureError(MapentError, ArithmeticError):
    pass


class NotNormalizedSpectrumError(MapentError, ValueError):
    pass


class LevelOutOfRangeError(MapentError, ValueError):
    pass


class SinglePartyStateError(MapentError, ValueError):
    pass


class InvalidExcitationCountError(MapentError, ValueError):
    pass


class DegenerateDrawError(MapentError, ArithmeticError):
    pass


class DimensionMismatchError(MapentError, ValueError):
    pass


class StateParseError(MapentError, ValueError):
    pass
