"""Exception hierarchy.

MathDomainError marks a violated mathematical precondition; the CLI maps
it to exit code 3.  UnknownName is a usage-level error (exit code 2).
"""


class MathDomainError(Exception):
    pass


class BackendMismatch(MathDomainError):
    """Operands live over different fields."""


class DivisionByZero(MathDomainError):
    pass


class NotInvertible(MathDomainError):
    pass


class RootOfUnity(MathDomainError):
    """A factor 1 - q^j vanished where it must not."""


class ZeroLambda(MathDomainError):
    pass


class InvalidWeight(MathDomainError):
    pass


class NotValuationZero(MathDomainError):
    pass


class NotValuationOne(MathDomainError):
    pass


class InnerValuationZero(MathDomainError):
    pass


class DegreeTooHigh(MathDomainError):
    pass


class SingularDiagonal(MathDomainError):
    pass


class NotRiordan(MathDomainError):
    pass


class NotSheffer(MathDomainError):
    pass


class NotCommuting(MathDomainError):
    pass


class NotDegreeDecreasing(MathDomainError):
    pass


class ZeroShift(MathDomainError):
    pass


class ForbiddenLambda(MathDomainError):
    pass


class CharP(MathDomainError):
    """Operation needs characteristic 0 (or a larger prime modulus)."""


class UnknownName(Exception):
    """A CLI reference was not registered and is not a valid inline spec."""
