import logging
import math
from typing import Callable, Iterator, Optional, Tuple


from config import get_settings
from exceptions import CapabilityError, UncalibratedError
from lie import lambda_tau_k, sigma_tau_k
from mellin import (
    kernel_heat_trace,
    mellin_power_closed,
    mellin_reg_numeric,
    term_list_expansion,
    zeta_term_list_closed
)
from orbital import decompose_cusp, decompose_identity
from schemas.lie import GHighestWeight, MHighestWeight
from schemas.mellin import HeatExpansion
from schemas.orbital import DigammaTermList
from schemas.torsion import HeatTerm, HeatTermSet, OrbifoldData
from specfun import gauss_integral

logger = logging.getLogger(__name__)


def k_heat_ft(tau_m: GHighestWeight) -> HeatTermSet:
    """k_t^tau = sum_k (-1)^(k+1) exp(-t lambda_{tau,k}^2) h_t^{sigma_{tau,k}}, k = 0..n."""
    terms = []
    for k in range(tau_m.n + 1):
        lam = lambda_tau_k(tau_m, k)
        terms.append(
            HeatTerm(k=k, sign=(-1) ** (k + 1), lam=lam, rate=lam * lam, sigma=sigma_tau_k(tau_m, k))
        )
    return HeatTermSet(terms=tuple(terms))


def _require_rank_one(tau_m: GHighestWeight, orb: OrbifoldData) -> None:
    if orb.n != 1 or tau_m.n != 1:
        raise CapabilityError(f"Explicit contributions need n = 1, got n = {orb.n}.")


def _require_c_psi(c_psi: Optional[float]) -> float:
    if c_psi is None or not math.isfinite(c_psi):
        raise UncalibratedError()
    return float(c_psi)


def _twins(sigma: MHighestWeight) -> Tuple[MHighestWeight, MHighestWeight]:
    return sigma, sigma.w0()


def _cusp_kernels(orb: OrbifoldData, sigma: MHighestWeight) -> Iterator[Tuple[float, DigammaTermList]]:
    """(C'(gamma), Omega(gamma, sigma) + Omega(gamma, w0 sigma)) for every cuspidal elliptic class."""
    for gamma in orb.cusp_elliptic:
        first, second = _twins(sigma)
        yield gamma.weight, decompose_cusp(gamma, first) + decompose_cusp(gamma, second)


def _identity_kernel(sigma: MHighestWeight) -> DigammaTermList:
    first, second = _twins(sigma)
    return decompose_identity(first) + decompose_identity(second)


def _numeric_zeta(terms: DigammaTermList, c: float) -> float:
    expansion = term_list_expansion(terms).scaled(1.0 / math.pi)
    return mellin_reg_numeric(lambda t: kernel_heat_trace(terms, t), expansion, c)


def m_ecusp(tau_m: GHighestWeight, orb: OrbifoldData, c_psi: Optional[float]) -> float:
    """
    Mellin contribution of the cuspidal elliptic classes:

        sum_k (-1)^(k+1) sum_gamma C'(gamma) Z(Omega(gamma, sigma_k) + Omega(gamma, w0 sigma_k), lambda_k)

    where Z is the closed-form regularised derivative of the (1/pi)-normalised kernel trace,
    i.e. -(2c_j/b_j) log Gamma(a_j + b_j lambda_k) + c_j C_j(psi) per digamma term and
    -(2c_j/e_j) log(d_j/e_j + lambda_k) per rational term.
    """
    _require_rank_one(tau_m, orb)
    if not orb.cusp_elliptic:
        return 0.0
    c_psi = _require_c_psi(c_psi)
    total = 0.0
    for term in k_heat_ft(tau_m).terms:
        for weight, kernel in _cusp_kernels(orb, term.sigma):
            total += term.sign * weight * zeta_term_list_closed(kernel, term.lam, c_psi).real
    logger.debug(f"MEcusp at tau = {tau_m.coeffs}: {total:.12g}")
    return total


def m_ecusp_numeric(tau_m: GHighestWeight, orb: OrbifoldData) -> float:
    """m_ecusp through numerical regularisation of the Gaussian kernel integrals."""
    _require_rank_one(tau_m, orb)
    total = 0.0
    for term in k_heat_ft(tau_m).terms:
        for weight, kernel in _cusp_kernels(orb, term.sigma):
            total += term.sign * weight * _numeric_zeta(kernel, term.lam)
    return total


def plancherel_expansion(sigma: MHighestWeight) -> HeatExpansion:
    """Integral of (lambda^2 + k_2^2) exp(-t lambda^2): sqrt(pi) (t^(-3/2)/2 + k_2^2 t^(-1/2))."""
    root_pi = math.sqrt(math.pi)
    return HeatExpansion(half_powers=((-1, 0.5 * root_pi), (0, root_pi * sigma.k2 ** 2)))


def _plancherel_zeta(sigma: MHighestWeight, c: float) -> float:
    return sum(
        coeff.real * mellin_power_closed(exponent, c, log_power)
        for exponent, log_power, coeff in plancherel_expansion(sigma).terms()
    )


def _plancherel_zeta_numeric(sigma: MHighestWeight, c: float) -> float:
    k2 = sigma.k2

    def density(lam):
        return lam * lam + k2 * k2

    return mellin_reg_numeric(lambda t: gauss_integral(density, t), plancherel_expansion(sigma), c)


def _identity_sum(
        tau_m: GHighestWeight,
        orb: OrbifoldData,
        zeta: Callable[[MHighestWeight, float], float]
) -> float:
    normalization = get_settings().PLANCHEREL_NORMALIZATION
    total = 0.0
    for term in k_heat_ft(tau_m).terms:
        total += term.sign * zeta(term.sigma, term.lam)
    return orb.volume * normalization * total


def m_i_identity(tau_m: GHighestWeight, orb: OrbifoldData) -> float:
    """
    Identity contribution: vol * N * sum_k (-1)^(k+1) Z_k with Z_k the regularised derivative of
    t -> integral of P_sigma(lambda) exp(-t (lambda^2 + lambda_k^2)), P_sigma = lambda^2 + k_2^2.

    Per k this is (2 pi / 3) lambda_k^3 - 2 pi k_2^2 lambda_k.
    """
    _require_rank_one(tau_m, orb)
    return _identity_sum(tau_m, orb, _plancherel_zeta)


def m_i_identity_numeric(tau_m: GHighestWeight, orb: OrbifoldData) -> float:
    _require_rank_one(tau_m, orb)
    return _identity_sum(tau_m, orb, _plancherel_zeta_numeric)


def m_script_i(tau_m: GHighestWeight, orb: OrbifoldData, c_psi: Optional[float]) -> float:
    """
    (kappa / 4 pi) sum_k (-1)^(k+1) Z(integral of (Omega(sigma_k) + Omega(w0 sigma_k)) e^(-t lambda^2)).

    The kernel integral is pi times the normalised trace, so the prefactor reduces to kappa / 4.
    """
    _require_rank_one(tau_m, orb)
    if orb.kappa == 0:
        return 0.0
    c_psi = _require_c_psi(c_psi)
    total = 0.0
    for term in k_heat_ft(tau_m).terms:
        total += term.sign * zeta_term_list_closed(_identity_kernel(term.sigma), term.lam, c_psi).real
    return orb.kappa / 4.0 * total


def m_script_i_numeric(tau_m: GHighestWeight, orb: OrbifoldData) -> float:
    _require_rank_one(tau_m, orb)
    if orb.kappa == 0:
        return 0.0
    total = 0.0
    for term in k_heat_ft(tau_m).terms:
        total += term.sign * _numeric_zeta(_identity_kernel(term.sigma), term.lam)
    return orb.kappa / 4.0 * total
