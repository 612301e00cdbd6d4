from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from schemas.examples.torsion import (
    orbifold_data_example,
    report_config_example,
    heat_term_set_example,
    torsion_row_example
)
from schemas.lie import GHighestWeight, MHighestWeight, EllipticClass


class OrbifoldData(BaseModel):
    n: int = Field(..., ge=1)
    volume: float = Field(..., gt=0)
    kappa: int = Field(0, ge=0)
    cusp_elliptic: Tuple[EllipticClass, ...] = ()
    base_tau: GHighestWeight

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                orbifold_data_example
            ]
        }
    }

    @model_validator(mode="before")
    @classmethod
    def expand_base_tau(cls, data):
        if isinstance(data, dict) and isinstance(data.get("base_tau"), (list, tuple)):
            data = {**data, "base_tau": {"n": data.get("n"), "coeffs": data["base_tau"]}}
        return data

    @model_validator(mode="after")
    def validate_ray_base(self) -> "OrbifoldData":
        if self.base_tau.n != self.n:
            raise ValueError("base_tau must have n + 1 coefficients.")
        if self.base_tau.coeffs[-1] < 1:
            raise ValueError("The ray base requires tau_{n+1} >= 1.")
        for gamma in self.cusp_elliptic:
            if len(gamma.p) != self.n:
                raise ValueError(f"Elliptic class {gamma.p}/{gamma.q} needs {self.n} angles.")
        return self


class ReportConfig(OrbifoldData):
    m_min: int = Field(1, ge=0)
    m_max: int = Field(..., ge=0)

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                report_config_example
            ]
        }
    }

    @model_validator(mode="after")
    def validate_range(self) -> "ReportConfig":
        if self.m_max < self.m_min:
            raise ValueError("m_max must not be smaller than m_min.")
        return self

    @property
    def orbifold(self) -> OrbifoldData:
        return OrbifoldData.model_validate(
            self.model_dump(exclude={"m_min", "m_max"})
        )

    @property
    def m_range(self) -> range:
        return range(self.m_min, self.m_max + 1)


class HeatTerm(BaseModel):
    k: int
    sign: int
    lam: int
    rate: int
    sigma: MHighestWeight

    model_config = {"frozen": True}


class HeatTermSet(BaseModel):
    terms: Tuple[HeatTerm, ...]

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                heat_term_set_example
            ]
        }
    }

    @model_validator(mode="after")
    def validate_distinct_rates(self) -> "HeatTermSet":
        rates = [term.rate for term in self.terms]
        if len(set(rates)) != len(rates):
            raise ValueError("Exponential rates lambda_{tau,k}^2 must be distinct.")
        return self


class GrowthModel(str, Enum):
    M_DIM = "m_dim"
    M_LOG_M = "m_log_m"
    M = "m"
    LOG_M = "log_m"


class GrowthFit(BaseModel):
    column: str
    model: GrowthModel
    coefficient: float
    max_relative_residual: float
    window: Tuple[int, int]


class TorsionRow(BaseModel):
    m: int
    dim: int
    lambdas: List[int]
    MI: Optional[float] = None
    MsI: Optional[float] = None
    MEcusp: Optional[float] = None

    model_config = {
        "json_schema_extra": {
            "examples": [
                torsion_row_example
            ]
        }
    }


class TorsionReport(BaseModel):
    rows: List[TorsionRow]
    fits: List[GrowthFit] = []
    omitted: Dict[str, str] = {}
    c_psi: Optional[float] = None


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str
    seconds: float


class HeatTermsRequest(BaseModel):
    base_tau: GHighestWeight
    m: int = Field(0, ge=0)

    model_config = {
        "json_schema_extra": {
            "examples": [
                {"base_tau": {"n": 1, "coeffs": [1, 1]}, "m": 3}
            ]
        }
    }


class CPsiResponse(BaseModel):
    c_psi: float
