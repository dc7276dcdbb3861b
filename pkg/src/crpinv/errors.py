"""Exception types shared across the package."""


class CrpinvError(Exception):
    """Base class for errors raised by this package."""


class ShapeError(CrpinvError, ValueError):
    """Operand shapes are incompatible with the requested operation."""


class DomainError(CrpinvError, TypeError):
    """Operands belong to different or unsupported scalar domains."""


class SingularMatrixError(CrpinvError, ArithmeticError):
    """A matrix required to be invertible is singular.

    The square inverses taken inside the pseudoinverse routines act on
    matrices that are nonsingular by construction, so this error signals
    a rank bookkeeping bug upstream rather than bad user input.
    """


class ConvergenceError(CrpinvError, RuntimeError):
    """An iterative routine exhausted its iteration budget."""


class InconsistentSystemError(CrpinvError, ValueError):
    """A linear system has no solution of the requested form.

    Attributes
    ----------
    residual : float
        Norm of the residual that witnesses the inconsistency.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
