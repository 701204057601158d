"""Exception hierarchy shared by all kzeta modules."""


class KzetaError(Exception):
    """Base class for every error raised by kzeta."""


class DomainError(KzetaError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class UnsupportedConfigurationError(KzetaError, ValueError):
    """The combination of arguments is well-formed but not supported."""


class PoleError(KzetaError, ZeroDivisionError):
    """Evaluation was requested at a genuine (non-removable) pole."""


class NotAvailableError(KzetaError, LookupError):
    """No closed form is stored for the requested arguments."""


class CapacityError(KzetaError, OverflowError):
    """A table or expansion was requested beyond its supported size."""


class NoConvergenceError(KzetaError, ArithmeticError):
    """An iterative scheme did not reach its target.

    The best estimate found so far is kept on ``best_estimate`` together
    with the last observed ``error_estimate``.
    """

    def __init__(self, message, best_estimate=None, error_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
