class BaseMellinError(Exception):
    """Base class for all errors raised by the regularised Mellin engine."""

    def __init__(self, message=None):
        if message is None:
            message = "A Mellin regularisation error occurred."
        super().__init__(message)


class CalibrationError(BaseMellinError):
    """Raised when C(psi) differs between reference triples beyond tolerance."""

    def __init__(self, message="C(psi) calibration is unstable across reference triples."):
        super().__init__(message)


class ExpansionFitError(BaseMellinError):
    """Raised when the small-t fit is ill-conditioned or leaves a large residual."""

    def __init__(self, message="Small-t expansion fit is ill-conditioned."):
        super().__init__(message)


class MissingExpansionError(BaseMellinError):
    """Raised when the supplied small-t expansion misses divergent terms."""

    def __init__(self, message="Small-t expansion does not cancel the divergence at t = 0."):
        super().__init__(message)
