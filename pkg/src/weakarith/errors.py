"""Exception hierarchy shared by every layer of the package."""


class ArithError(Exception):
    """Base class for all errors raised by weakarith."""


class MalformedInput(ArithError, ValueError):
    pass


class DomainMismatch(ArithError, TypeError):
    """Operands come from different coefficient domains or models."""


class OutOfCone(ArithError, ValueError):
    """The result (or an argument) is not a non-negative member of the model."""


class UnsupportedOperation(ArithError):
    """The model does not carry the requested operation (e.g. halving in Z[X])."""


class UnsupportedElement(ArithError):
    """The element lies outside the shapes the divisor characterization covers."""


class ParseError(ArithError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
