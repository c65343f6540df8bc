"""Exception types raised across the package."""


class InvalidParams(ValueError):
    """Parameters outside the supported domain (non-prime p, k < 1, ...)."""


class ZeroInverse(ZeroDivisionError):
    pass


class DivisionByZeroPoly(ZeroDivisionError):
    pass


class ZeroToZeroPower(ArithmeticError):
    pass


class ZeroOrder(ArithmeticError):
    pass


class CtxMismatch(ValueError):
    """Operands belong to different fields."""


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


class NotInvolution(ValueError):
    pass


class XiZero(ValueError):
    pass


class XiNotInVminus(ValueError):
    pass


class RankDeficiency(ValueError):
    pass


class TooLarge(ValueError):
    pass


class ParseError(ValueError):
    """Malformed text input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
