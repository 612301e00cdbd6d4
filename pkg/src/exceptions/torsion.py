class BaseTorsionError(Exception):
    """Base class for all errors raised by the torsion assembly layer."""

    def __init__(self, message=None):
        if message is None:
            message = "A torsion assembly error occurred."
        super().__init__(message)


class CapabilityError(BaseTorsionError):
    """Raised when a contribution is only implemented for n = 1."""

    def __init__(self, message="This contribution is only available for n = 1."):
        super().__init__(message)


class UncalibratedError(BaseTorsionError):
    """Raised when C(psi) is missing or not finite."""

    def __init__(self, message="C(psi) must be calibrated before assembling the cusp contribution."):
        super().__init__(message)


class DegenerateModelError(BaseTorsionError):
    """Raised when the growth model matrix has no usable column."""

    def __init__(self, message="Growth model matrix is degenerate."):
        super().__init__(message)
