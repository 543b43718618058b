"""Exception types shared across the package."""


class QFibError(Exception):
    """Base class for all errors raised by qfibdiv."""


class DomainError(QFibError, ValueError):
    """An argument lies outside the supported domain."""


class NonUnitLeadingCoefficient(QFibError, ValueError):
    pass


class DivisionByZero(QFibError, ZeroDivisionError):
    pass


class ParseError(QFibError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ModulusMismatch(QFibError, ValueError):
    pass


class ZeroPolynomial(QFibError, ValueError):
    pass


class UnknownClaim(QFibError, KeyError):
    pass


class BoundTooLarge(QFibError, ValueError):
    pass
