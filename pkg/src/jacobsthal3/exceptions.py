"""Exception hierarchy shared by the numeric, sequence and identity layers."""


class Jacobsthal3Error(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(Jacobsthal3Error, ZeroDivisionError):
    pass


class SingularMatrix(Jacobsthal3Error, ArithmeticError):
    pass


class NonRationalResult(Jacobsthal3Error, ArithmeticError):
    """A closed form over Q(omega) left a nonzero omega-component.

    This signals a bug in the evaluation path, never bad user input.
    """


class UnsupportedSequence(Jacobsthal3Error, ValueError):
    pass


class BadRange(Jacobsthal3Error, ValueError):
    pass


class UnknownIdentity(Jacobsthal3Error, KeyError):
    pass


class BadParams(Jacobsthal3Error, ValueError):
    pass


class IdentityMismatch(Jacobsthal3Error, AssertionError):
    """Two sides of an identity that must agree came out different."""


class BFileParseError(Jacobsthal3Error, ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
