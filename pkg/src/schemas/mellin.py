from typing import Iterator, Tuple

import numpy as np
from pydantic import BaseModel


class HeatExpansion(BaseModel):
    """
    Small-t expansion

        sum_j a'_j t^(j - shift) + sum_j b'_j t^(j - 1/2) log t + sum_j c'_j t^j

    with `shift` = d/2 for the leading family (1/2 for one-dimensional lambda integrals).
    """

    half_powers: Tuple[Tuple[int, complex], ...] = ()
    log_terms: Tuple[Tuple[int, complex], ...] = ()
    integer_powers: Tuple[Tuple[int, complex], ...] = ()
    shift: float = 0.5
    condition_number: float | None = None

    model_config = {"frozen": True}

    def terms(self) -> Iterator[Tuple[float, int, complex]]:
        """Yield (exponent, log power, coefficient) for every stored term."""
        for j, coeff in self.half_powers:
            yield j - self.shift, 0, coeff
        for j, coeff in self.log_terms:
            yield j - 0.5, 1, coeff
        for j, coeff in self.integer_powers:
            yield float(j), 0, coeff

    def evaluate(self, t):
        t = np.asarray(t, dtype=float)
        total = np.zeros(t.shape, dtype=complex)
        for exponent, log_power, coeff in self.terms():
            total += coeff * t ** exponent * np.log(t) ** log_power
        return total if total.ndim else complex(total)

    def coefficient(self, exponent: float, log_power: int = 0) -> complex:
        return sum(
            (coeff for exp, power, coeff in self.terms()
             if power == log_power and abs(exp - exponent) < 1e-12),
            0j,
        )

    def __add__(self, other: "HeatExpansion") -> "HeatExpansion":
        if self.shift != other.shift:
            raise ValueError("Cannot add expansions with different leading shifts.")

        def merge(left, right):
            merged: dict[int, complex] = {}
            for j, coeff in left + right:
                merged[j] = merged.get(j, 0j) + coeff
            return tuple(sorted(merged.items()))

        return HeatExpansion(
            half_powers=merge(self.half_powers, other.half_powers),
            log_terms=merge(self.log_terms, other.log_terms),
            integer_powers=merge(self.integer_powers, other.integer_powers),
            shift=self.shift,
        )

    def scaled(self, factor: complex) -> "HeatExpansion":
        return HeatExpansion(
            half_powers=tuple((j, c * factor) for j, c in self.half_powers),
            log_terms=tuple((j, c * factor) for j, c in self.log_terms),
            integer_powers=tuple((j, c * factor) for j, c in self.integer_powers),
            shift=self.shift,
        )
