"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by darbouxp."""


class NotPrime(AlgebraError, ValueError):
    pass


class CapacityExceeded(AlgebraError):
    """An intermediate object outgrew a configured bound (degree cap, modulus cap)."""


class BudgetExceeded(AlgebraError):
    """A brute-force search would examine more candidates than allowed."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class ModulusMismatch(AlgebraError, ValueError):
    pass


class ContextMismatch(AlgebraError, ValueError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class ZeroInput(AlgebraError, ValueError):
    pass


class ConstantInput(AlgebraError, ValueError):
    pass


class NonIntegrableExponent(AlgebraError, ValueError):
    def __init__(self, monomial, var_index):
        self.monomial = monomial
        self.var_index = var_index
        super().__init__(
            f"monomial with exponents {monomial} cannot be integrated in variable {var_index}"
        )


class DegreeZero(AlgebraError, ValueError):
    pass


class WrongArity(AlgebraError, ValueError):
    pass


class PreconditionViolated(AlgebraError, ValueError):
    pass


class DependentFamily(AlgebraError, ValueError):
    """The dependency locus of the family vanishes identically."""


class TheoremViolation(AlgebraError, RuntimeError):
    """An internal consistency check guaranteed by theory failed (a bug)."""


class ParseError(AlgebraError, ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownVariable(ParseError):
    def __init__(self, name, position):
        self.name = name
        AlgebraError.__init__(self, f"unknown variable {name!r} at position {position}")
        self.position = position
