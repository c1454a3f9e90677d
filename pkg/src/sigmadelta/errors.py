"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class ShapeError(ValueError):
    pass


class NotAUnit(ArithmeticError):
    """Raised when inverting a ring element that has no inverse."""


class ZeroPolynomial(ValueError):
    pass


class SpecializationError(ValueError):
    pass


class InvalidSpecialization(SpecializationError):
    """A specialization point makes the denominator witness (or an entry) vanish."""


class SingularSpecialization(SpecializationError):
    """The specialized difference matrix is singular."""


class EmptyInput(ValueError):
    pass


class NotInG(ValueError):
    """A matrix is not an element of the full Chebyshev group."""


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = f" (line {line}, column {col})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ExprError(ValueError):
    def __init__(self, message, cell=None):
        self.cell = cell
        self.message = message
        prefix = f"{cell}: " if cell is not None else ""
        super().__init__(f"{prefix}{message}")


class UsageError(ValueError):
    pass
