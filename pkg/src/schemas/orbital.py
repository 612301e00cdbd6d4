from enum import Enum
from typing import Tuple

import numpy as np
from pydantic import BaseModel, Field

from schemas.lie import MHighestWeight
from specfun.gamma import digamma


class PsiTerm(BaseModel):
    """c * psi(a + i b lambda)."""

    c: complex
    a: float = Field(..., gt=0)
    b: float = Field(..., gt=0)

    model_config = {"frozen": True}


class RationalTerm(BaseModel):
    """c / (i e lambda + d)."""

    c: complex
    d: float = Field(..., gt=0)
    e: float = Field(..., gt=0)

    model_config = {"frozen": True}


class DigammaTermList(BaseModel):
    """
    Finite kernel sum_j c_j psi(a_j + i b_j lambda) + sum_j c_j / (i e_j lambda + d_j) + constant.

    Lists produced by the decompositions represent their kernel up to the reflection
    lambda -> -lambda of individual terms, i.e. they share its even part, which is all that a
    Gaussian-weighted integral over the real line sees.
    """

    psi_terms: Tuple[PsiTerm, ...] = ()
    rational_terms: Tuple[RationalTerm, ...] = ()
    constant: complex = 0j

    model_config = {"frozen": True}

    def evaluate(self, lam):
        """Pointwise value of the term sum; vectorised over `lam`."""
        lam = np.asarray(lam, dtype=float)
        total = np.full(lam.shape, self.constant, dtype=complex)
        for term in self.psi_terms:
            total += term.c * digamma(term.a + 1j * term.b * lam)
        for term in self.rational_terms:
            total += term.c / (1j * term.e * lam + term.d)
        return total if total.ndim else complex(total)

    def even_part(self, lam):
        lam = np.asarray(lam, dtype=float)
        value = 0.5 * (np.asarray(self.evaluate(lam)) + np.asarray(self.evaluate(-lam)))
        return value if value.ndim else complex(value)

    def __add__(self, other: "DigammaTermList") -> "DigammaTermList":
        return DigammaTermList(
            psi_terms=self.psi_terms + other.psi_terms,
            rational_terms=self.rational_terms + other.rational_terms,
            constant=self.constant + other.constant,
        )

    def scaled(self, factor: complex) -> "DigammaTermList":
        return DigammaTermList(
            psi_terms=tuple(term.model_copy(update={"c": term.c * factor}) for term in self.psi_terms),
            rational_terms=tuple(
                term.model_copy(update={"c": term.c * factor}) for term in self.rational_terms
            ),
            constant=self.constant * factor,
        )


class OmegaKind(str, Enum):
    IDENTITY_PARABOLIC = "identity-parabolic"
    CUSPIDAL_ELLIPTIC = "cuspidal-elliptic"


class OmegaFunction(BaseModel):
    terms: DigammaTermList
    sigma: MHighestWeight
    kind: OmegaKind

    model_config = {"frozen": True}

    def __call__(self, lam):
        return self.terms.even_part(lam)
