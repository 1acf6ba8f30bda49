"""Exception types raised across the package."""


class BeltError(Exception):
    """Base class for every error raised by braidbelts."""


class ParseError(BeltError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)


class NonOrientable(BeltError, ValueError):
    pass


class NotPure(BeltError, ValueError):
    pass


class NotHalfOdd(BeltError, ValueError):
    pass


class Unsupported(BeltError):
    pass


class NonUnitNegativePower(BeltError, ArithmeticError):
    pass


class InexactDivision(BeltError, ArithmeticError):
    pass


class NonIntegerTwists(BeltError, ValueError):
    pass


class ConflictingName(BeltError, ValueError):
    pass


class EvenLength(BeltError, ValueError):
    pass
