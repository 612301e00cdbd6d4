from schemas.lie import (
    GHighestWeight,
    MHighestWeight,
    EllipticClass
)
from schemas.specfun import RootOfUnity
from schemas.mellin import HeatExpansion
from schemas.orbital import (
    PsiTerm,
    RationalTerm,
    DigammaTermList,
    OmegaKind,
    OmegaFunction
)
from schemas.torsion import (
    OrbifoldData,
    ReportConfig,
    HeatTerm,
    HeatTermSet,
    GrowthModel,
    GrowthFit,
    TorsionRow,
    TorsionReport,
    CheckResult,
    HeatTermsRequest,
    CPsiResponse
)
