class BaseSpecialFunctionError(Exception):
    """Base class for all errors raised by the special-function kernel."""

    def __init__(self, message=None):
        if message is None:
            message = "A special-function error occurred."
        super().__init__(message)


class DigammaPoleError(BaseSpecialFunctionError):
    """Raised when digamma is evaluated at a nonpositive integer."""

    def __init__(self, message="Digamma has a pole at nonpositive integers."):
        super().__init__(message)


class DomainError(BaseSpecialFunctionError):
    """Raised when an argument lies outside the domain of a function."""

    def __init__(self, message="Argument outside the domain of the function."):
        super().__init__(message)


class SeriesDivergenceError(BaseSpecialFunctionError):
    """Raised when b(s, z) is requested at z = 1."""

    def __init__(self, message="The series b(s, z) diverges at z = 1."):
        super().__init__(message)


class QuadratureError(BaseSpecialFunctionError):
    """Raised when panel doubling in the Gaussian quadrature does not converge."""

    def __init__(self, message="Quadrature did not converge after the maximal number of refinements."):
        super().__init__(message)
