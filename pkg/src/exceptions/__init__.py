from exceptions.lie import (
    BaseLieError,
    InvalidWeightError,
    IndexOutOfRangeError,
    SingularElementError
)
from exceptions.specfun import (
    BaseSpecialFunctionError,
    DigammaPoleError,
    DomainError,
    SeriesDivergenceError,
    QuadratureError
)
from exceptions.mellin import (
    BaseMellinError,
    CalibrationError,
    ExpansionFitError,
    MissingExpansionError
)
from exceptions.torsion import (
    BaseTorsionError,
    CapabilityError,
    UncalibratedError,
    DegenerateModelError
)
