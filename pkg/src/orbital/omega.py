import cmath
import logging
import math
from fractions import Fraction
from typing import List

import numpy as np

from exceptions import CapabilityError, DigammaPoleError, DomainError
from lie import m_weyl_dim
from orbital.terms import RawPsiTerm, normalize_terms
from schemas.lie import EllipticClass, MHighestWeight
from schemas.orbital import DigammaTermList, OmegaFunction, OmegaKind
from schemas.specfun import RootOfUnity
from specfun import b_closed, digamma

logger = logging.getLogger(__name__)


def _require_rank_one(sigma: MHighestWeight, gamma: EllipticClass | None = None) -> None:
    if sigma.n != 1 or (gamma is not None and len(gamma.p) != 1):
        raise CapabilityError("Explicit Omega functions are only available for n = 1.")


def decompose_identity(sigma: MHighestWeight) -> DigammaTermList:
    """
    Term list of the identity-parabolic Omega for n = 1.

    The roots e_1 -+ e_2 evaluate to i lambda -+ k_2, so the four digamma arguments are
    1 +- (i lambda - k_2) and 1 +- (i lambda + k_2), each with coefficient -1/2.
    """
    _require_rank_one(sigma)
    k = sigma.k2
    raw: List[RawPsiTerm] = [
        (-0.5, Fraction(1 - k), Fraction(1)),
        (-0.5, Fraction(1 + k), Fraction(-1)),
        (-0.5, Fraction(1 + k), Fraction(1)),
        (-0.5, Fraction(1 - k), Fraction(-1)),
    ]
    return normalize_terms(raw, constant=-2.0 * np.euler_gamma * m_weyl_dim(sigma))


def omega_identity(sigma: MHighestWeight, lam):
    """
    Omega(sigma, lambda) = -2 dim(sigma) gamma_E - 1/2 sum_alpha [psi(1 + lambda_sigma(H_alpha))
    + psi(1 - lambda_sigma(H_alpha))] for n = 1.

    The function is real and even. At lambda = 0 with k_2 != 0 the individual digamma poles
    cancel and the value is taken from the term list, which is regular there.
    """
    _require_rank_one(sigma)
    k = sigma.k2
    lam = np.asarray(lam, dtype=float)
    at_pole = (lam == 0) & (k != 0)
    z = 1j * np.where(at_pole, 1.0, lam)

    value = -2.0 * np.euler_gamma * m_weyl_dim(sigma) - 0.5 * (
        digamma(1 + z - k) + digamma(1 - z + k) + digamma(1 + z + k) + digamma(1 - z - k)
    )
    if np.any(at_pole):
        value = np.where(at_pole, decompose_identity(sigma).evaluate(0.0), value)
    value = np.asarray(value, dtype=complex)
    return value if value.ndim else complex(value)


def _cusp_parameters(gamma: EllipticClass, sigma: MHighestWeight):
    _require_rank_one(sigma, gamma)
    p, q, k = gamma.p[0], gamma.q, sigma.k2
    phase = cmath.exp(2j * math.pi * p * k / q)
    return RootOfUnity(m=q, p=p), RootOfUnity(m=q, p=-p), phase, k


def omega_cusp_so13(gamma: EllipticClass, sigma: MHighestWeight, lam: float) -> complex:
    """
    Omega(gamma, sigma, lambda) for SO_0(1, 3):

        1/2 [e^{2 i phi k}(b(i lambda - k, z) + b(i lambda + k, 1/z))
             + e^{-2 i phi k}(b(-i lambda + k, z) + b(-i lambda - k, 1/z))],   z = e^{2 i phi},

    with every b evaluated through its digamma closed form.

    A single Omega has a simple pole at lambda = 0 with residue proportional to
    sin(4 phi k_2). When that residue vanishes the finite value at 0 is returned.

    :raises DigammaPoleError: At lambda = 0 when the residue does not vanish.
    """
    z, z_inv, phase, k = _cusp_parameters(gamma, sigma)
    lam = float(lam)

    if lam == 0.0 and k != 0:
        if abs(math.sin(4.0 * math.pi * gamma.p[0] * k / gamma.q)) > 1e-12:
            raise DigammaPoleError(
                f"Omega(gamma, sigma) has a pole at lambda = 0 for phi = {gamma.p[0]}pi/{gamma.q}, k2 = {k}."
            )
        return complex(decompose_cusp(gamma, sigma).evaluate(0.0))

    s = 1j * lam
    value = phase * (b_closed(s - k, z.m, z.p) + b_closed(s + k, z_inv.m, z_inv.p))
    value += phase.conjugate() * (b_closed(-s + k, z.m, z.p) + b_closed(-s - k, z_inv.m, z_inv.p))
    return complex(0.5 * value)


def decompose_cusp(gamma: EllipticClass, sigma: MHighestWeight) -> DigammaTermList:
    """
    Digamma decomposition of omega_cusp_so13.

    Each b(s, z) with z of exact order m becomes -(1/m) sum_j z^j psi((s + j)/m), so a term
    with s = +-i lambda + kappa contributes psi((kappa + j)/m +- i lambda/m). All lambda
    slopes equal 1/m; the k_2-dependence sits in the shifts a_j.
    """
    z, z_inv, phase, k = _cusp_parameters(gamma, sigma)
    blocks = (
        (phase, z, 1, -k),
        (phase, z_inv, 1, k),
        (phase.conjugate(), z, -1, k),
        (phase.conjugate(), z_inv, -1, -k),
    )

    raw: List[RawPsiTerm] = []
    for weight, root, direction, shift in blocks:
        for j in range(1, root.m + 1):
            coeff = -0.5 * weight * cmath.exp(2j * math.pi * root.p * j / root.m) / root.m
            raw.append((coeff, Fraction(shift + j, root.m), Fraction(direction, root.m)))
    return normalize_terms(raw)


def omega_cusp_symmetric(gamma: EllipticClass, sigma: MHighestWeight, lam):
    """Omega(gamma, sigma, lambda) + Omega(gamma, w0 sigma, lambda); real, even and regular at 0."""
    terms = decompose_cusp(gamma, sigma) + decompose_cusp(gamma, sigma.w0())
    return terms.even_part(lam)


def identity_omega(sigma: MHighestWeight) -> OmegaFunction:
    return OmegaFunction(
        terms=decompose_identity(sigma), sigma=sigma, kind=OmegaKind.IDENTITY_PARABOLIC
    )


def cusp_omega(gamma: EllipticClass, sigma: MHighestWeight) -> OmegaFunction:
    return OmegaFunction(
        terms=decompose_cusp(gamma, sigma), sigma=sigma, kind=OmegaKind.CUSPIDAL_ELLIPTIC
    )


def theta_ft_heat(rep: MHighestWeight, sigma: MHighestWeight, lam: float, t: float) -> float:
    """Fourier transform of h_t^sigma: exp(-t lambda^2) on sigma and w0 sigma, 0 elsewhere."""
    if not t > 0:
        raise DomainError("theta_ft_heat requires t > 0.")
    if rep == sigma or rep == sigma.w0():
        return math.exp(-t * lam * lam)
    return 0.0
