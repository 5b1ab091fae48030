"""Exception hierarchy shared by every grossone module."""


class GrossError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(GrossError, ZeroDivisionError):
    pass


class ZeroToNegativePower(DivisionByZero):
    pass


class NotRepresentable(GrossError, ArithmeticError):
    """The exact result is not a finite sum of grosspowers."""


class NonIntegerExponent(GrossError, ValueError):
    pass


class NonPositivePoint(GrossError, ValueError):
    pass


class ParseError(GrossError, ValueError):
    """Syntax error with a 1-based character position."""

    def __init__(self, position: int, message: str):
        super().__init__(f"position {position}: {message}")
        self.position = position
        self.message = message


class LambdaNotSquare(GrossError, ValueError):
    pass


class NotPrimeParameter(GrossError, ValueError):
    pass


class NegativeM(GrossError, ValueError):
    pass


class PrimeExceedsBound(GrossError, ValueError):
    pass
