"""Exception hierarchy shared by every module of the package."""


class JordanianError(Exception):
    """Base class for all errors raised by this package."""


class UnknownGenerator(JordanianError):
    def __init__(self, name, algebra=None):
        where = f" in algebra {algebra!r}" if algebra else ""
        super().__init__(f"unknown generator {name!r}{where}")
        self.name = name
        self.algebra = algebra


class UnknownAlgebra(JordanianError):
    def __init__(self, name):
        super().__init__(f"unknown algebra {name!r}")
        self.name = name


class FuelExhausted(JordanianError):
    """The rewrite-step budget of a normal-ordering call ran out."""


class OrderMismatch(JordanianError):
    pass


class AlgebraMismatch(JordanianError):
    pass


class LegMismatch(JordanianError):
    pass


class NonNilpotentArgument(JordanianError):
    """An analytic function was applied to a series with a nonzero h^0 part."""


class NotDivisible(JordanianError):
    pass


class NonCommutativeInput(JordanianError):
    pass


class NonContractible(JordanianError):
    def __init__(self, message, offending=()):
        super().__init__(message)
        self.offending = list(offending)


class NoSuchForm(JordanianError):
    pass


class NonNilpotentExponent(JordanianError):
    pass


class TruncationTooLow(JordanianError):
    """A represented element was not provably finite at the requested order."""


class RepresentationError(JordanianError):
    """A matrix assignment violates a defining relation of its algebra."""


class ExprSyntaxError(JordanianError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
