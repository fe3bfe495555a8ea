"""Exception hierarchy shared by every bchlab module."""


class BchLabError(Exception):
    pass


class BudgetExceeded(BchLabError):
    pass


class FieldMismatch(BchLabError):
    pass


class DivisionByZero(BchLabError, ZeroDivisionError):
    pass


class NotCoprime(BchLabError, ValueError):
    pass


class OutOfRange(BchLabError, ValueError):
    pass


class ParityMismatch(OutOfRange):
    pass


class ConditionViolated(OutOfRange):
    pass


class SpecMismatch(BchLabError, ValueError):
    pass


class ConjugateRoots(BchLabError, ValueError):
    pass


class DivisibilityViolation(BchLabError, ValueError):
    pass


class NonIntegerResult(BchLabError, ArithmeticError):
    pass


class UnknownSuite(BchLabError, KeyError):
    pass
