import cmath
import math

from pydantic import BaseModel, Field, model_validator


class RootOfUnity(BaseModel):
    """The root of unity exp(2*pi*i*p/m), stored with gcd(p, m) = 1 and 0 <= p < m."""

    m: int = Field(..., ge=1)
    p: int

    model_config = {"frozen": True}

    @model_validator(mode="before")
    @classmethod
    def reduce_fraction(cls, data):
        if isinstance(data, dict) and "m" in data and "p" in data:
            m, p = int(data["m"]), int(data["p"])
            if m >= 1:
                p %= m
                divisor = math.gcd(p, m)
                data = {"m": m // divisor, "p": p // divisor}
        return data

    @property
    def is_one(self) -> bool:
        return self.p == 0

    @property
    def value(self) -> complex:
        return cmath.exp(2j * math.pi * self.p / self.m)
