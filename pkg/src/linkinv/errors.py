"""Exception hierarchy shared by every linkinv module."""


class LinkInvError(Exception):
    """Base class for all linkinv errors."""


class RingMismatchError(LinkInvError, TypeError):
    """Operands live over different coefficient rings (Z versus GF(2))."""


class DivisorZeroError(LinkInvError, ZeroDivisionError):
    pass


class NotDivisibleError(LinkInvError, ArithmeticError):
    pass


class NotInImageError(LinkInvError, ValueError):
    """Polynomial is not of the form a0 + sum a_n (n^2 s - s^n)."""


class NotSigmaShapedError(LinkInvError, ValueError):
    """Polynomial has negative exponents or does not vanish at s = 1."""


class InvariantViolation(LinkInvError, ValueError):
    """A structural constraint on input data, or an asserted identity, failed.

    ``step`` is set when the violation happens inside a replay.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class NotInSpanError(InvariantViolation):
    """A symmetric polynomial is outside the span of s^n + s^-n + n(s + s^-1)."""


class DivisionFailed(InvariantViolation):
    pass


class ParseError(LinkInvError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class SchemaError(LinkInvError, ValueError):
    def __init__(self, field, message=None):
        self.field = field
        super().__init__(message or f"invalid field {field!r}")


class GenerationExhausted(LinkInvError, RuntimeError):
    pass
