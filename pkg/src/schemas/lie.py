import math
from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from schemas.examples.torsion import (
    g_highest_weight_example,
    m_highest_weight_example,
    elliptic_class_example
)


class GHighestWeight(BaseModel):
    """Highest weight of SO_0(1, 2n+1) in the coordinates e_1, ..., e_{n+1}."""

    n: int = Field(..., ge=1)
    coeffs: Tuple[int, ...]

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                g_highest_weight_example
            ]
        }
    }

    @model_validator(mode="after")
    def validate_dominance(self) -> "GHighestWeight":
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"Expected {self.n + 1} coefficients, got {len(self.coeffs)}.")
        if any(value < 0 for value in self.coeffs):
            raise ValueError("Highest weight coefficients must be nonnegative.")
        if any(left < right for left, right in zip(self.coeffs, self.coeffs[1:])):
            raise ValueError("Highest weight coefficients must be weakly decreasing.")
        return self


class MHighestWeight(BaseModel):
    """Highest weight of M = SO(2n) in the coordinates e_2, ..., e_{n+1}."""

    n: int = Field(..., ge=1)
    coeffs: Tuple[int, ...]

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                m_highest_weight_example
            ]
        }
    }

    @model_validator(mode="after")
    def validate_dominance(self) -> "MHighestWeight":
        if len(self.coeffs) != self.n:
            raise ValueError(f"Expected {self.n} coefficients, got {len(self.coeffs)}.")
        head = self.coeffs[:-1]
        if any(left < right for left, right in zip(head, head[1:])):
            raise ValueError("M-weight coefficients must be weakly decreasing.")
        if head and head[-1] < abs(self.coeffs[-1]):
            raise ValueError("M-weight must satisfy k_n >= |k_{n+1}| (type D dominance).")
        return self

    @property
    def k2(self) -> int:
        return self.coeffs[0]

    def w0(self) -> "MHighestWeight":
        """The Weyl twist: sign flip of the last coordinate."""
        return MHighestWeight(n=self.n, coeffs=self.coeffs[:-1] + (-self.coeffs[-1],))


class EllipticClass(BaseModel):
    """
    Cuspidal elliptic class of finite order q.

    The element rotates the j-th plane by 2*phi_j with phi_j = pi * p_j / q; `weight` is the
    constant C'(gamma) multiplying its contribution.
    """

    p: Tuple[int, ...]
    q: int = Field(..., ge=2)
    weight: float = 1.0

    model_config = {
        "frozen": True,
        "json_schema_extra": {
            "examples": [
                elliptic_class_example
            ]
        }
    }

    @field_validator("p", mode="before")
    @classmethod
    def wrap_scalar_numerator(cls, value):
        if isinstance(value, int):
            return (value,)
        return value

    @field_validator("weight")
    @classmethod
    def validate_weight(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("Weight C'(gamma) must be finite.")
        return value

    @model_validator(mode="after")
    def validate_angles(self) -> "EllipticClass":
        if not self.p:
            raise ValueError("At least one rotation angle is required.")
        for numerator in self.p:
            if not 0 < numerator < self.q:
                raise ValueError(f"Angle numerator {numerator} must satisfy 0 < p < q = {self.q}.")
        return self

    @property
    def angles(self) -> Tuple[float, ...]:
        return tuple(math.pi * numerator / self.q for numerator in self.p)

    @property
    def angle_fractions(self) -> Tuple[Fraction, ...]:
        """phi_j / pi as exact fractions."""
        return tuple(Fraction(numerator, self.q) for numerator in self.p)
