class BaseLieError(Exception):
    """Base class for all errors raised by the weight and character arithmetic."""

    def __init__(self, message=None):
        if message is None:
            message = "A representation-theory error occurred."
        super().__init__(message)


class InvalidWeightError(BaseLieError):
    """Raised when a highest weight is not dominant or not integral."""

    def __init__(self, message="Highest weight is not a dominant integral weight."):
        super().__init__(message)


class IndexOutOfRangeError(BaseLieError):
    """Raised when the heat-kernel index k is outside 0..n."""

    def __init__(self, message="Index k must satisfy 0 <= k <= n."):
        super().__init__(message)


class SingularElementError(BaseLieError):
    """Raised when a character is requested at a non-regular torus element."""

    def __init__(self, message="Character denominator vanishes at a singular element."):
        super().__init__(message)
