"""Exception hierarchy shared by every module."""


class BorelError(Exception):
    """Base class for all library errors."""


class ParseError(BorelError, ValueError):
    pass


class DimensionError(BorelError, ValueError):
    pass


class ShapeError(BorelError, ValueError):
    """A matrix violates the triangularity its role requires."""


class NotInvertibleError(BorelError, ZeroDivisionError):
    pass


class NotRegularSemisimpleError(BorelError, ValueError):
    """Diagonal entries of ``r`` are not pairwise distinct."""


class LimitDoesNotExistError(BorelError, ArithmeticError):
    pass


class InvalidFiberPointError(BorelError, ValueError):
    pass


class NotInFiberError(BorelError, ValueError):
    pass


class NotInTargetError(BorelError, ValueError):
    pass


class SymbolicSizeError(BorelError, ValueError):
    pass


class GenerationError(BorelError, RuntimeError):
    pass
