import logging
import math
from typing import Callable, List, Tuple

import numpy as np
from scipy import integrate

from config import get_settings
from exceptions import DomainError, MissingExpansionError
from schemas.mellin import HeatExpansion
from schemas.orbital import DigammaTermList
from specfun import digamma, gauss_integral

logger = logging.getLogger(__name__)

Term = Tuple[float, int, float]


def kernel_heat_trace(terms: DigammaTermList, t: float) -> complex:
    """(1/pi) * integral of terms(lambda) exp(-t lambda^2) over the real line."""
    return gauss_integral(terms, t) / math.pi


def _damped_terms(expansion: HeatExpansion, c: float) -> List[Term]:
    """Terms of exp(-t c^2) times the expansion with exponent below 1."""
    damped: List[Term] = []
    for exponent, log_power, coeff in expansion.terms():
        n = 0
        while exponent + n < 1.0:
            damped.append((exponent + n, log_power, float(np.real(coeff)) * (-c * c) ** n / math.factorial(n)))
            n += 1
    return damped


def _taylor_order(exponent: float) -> int:
    """Number of exp(-t c^2) Taylor terms that keep t^exponent below t^1."""
    return max(0, math.ceil(1.0 - exponent - 1e-12))


def _exp_remainder(x: float, order: int) -> float:
    """exp(-x) minus its Taylor polynomial of degree order - 1."""
    if x < 1.0:
        return sum((-x) ** n / math.factorial(n) for n in range(order, order + 25))
    return math.exp(-x) - sum((-x) ** n / math.factorial(n) for n in range(order))


def _magnitude(terms: List[Term], t: float) -> float:
    return sum(abs(coeff) * t ** exponent * abs(math.log(t)) ** log_power for exponent, log_power, coeff in terms)


def _head_cutoff(singular: List[Term], ceiling: float) -> float:
    """
    Smallest t = 10^-j at which the singular terms stay within `ceiling` times their size at t = 1.

    Further down G(t) minus its singular part is rounding noise.
    """
    limit = ceiling * max(1.0, _magnitude(singular, 1.0))
    for j in range(1, 16):
        if _magnitude(singular, 10.0 ** -j) > limit:
            return 10.0 ** -(j - 1) if j > 1 else 0.1
    return 0.0


def _pole_contribution(exponent: float, log_power: int, coeff: float) -> float:
    if log_power == 0:
        return coeff * np.euler_gamma if abs(exponent) < 1e-12 else coeff / exponent
    if abs(exponent) < 1e-12:
        raise DomainError("A t^0 log t term has no regularised value at s = 0.")
    return -coeff / exponent ** 2


def mellin_reg_numeric(G: Callable[[float], complex], expansion: HeatExpansion, c: float) -> float:
    """
    d/ds at s = 0 of (1/Gamma(s)) * integral over t > 0 of t^(s-1) exp(-t c^2) G(t).

    The integral is split at t = 1. On [0, 1] the terms of exp(-t c^2) * expansion with exponent
    below 1 are subtracted and integrated analytically in s; on [1, inf) the factor
    1/Gamma(s) = s + gamma_E s^2 + ... reduces the derivative to the plain integral.

    The subtracted head is evaluated as exp(-t c^2) (G - G_sing) plus G_sing times the Taylor
    remainder of exp(-t c^2), where G_sing collects the expansion terms below t^1. The first part
    is integrated from the noise cutoff of G_sing upwards, the second from 0.

    Only the real part of G is regularised.

    :param G: Heat trace t -> G(t).
    :param expansion: Small-t expansion of G, complete below t^1.
    :param c: Damping parameter, c >= 0.
    :raises MissingExpansionError: If the subtracted integrand is not integrable at t = 0.
    """
    if c < 0:
        raise DomainError("mellin_reg_numeric requires c >= 0.")
    settings = get_settings()
    singular = [
        (exponent, log_power, float(np.real(coeff)))
        for exponent, log_power, coeff in expansion.terms() if exponent < 1.0
    ]
    cutoff = _head_cutoff(singular, settings.MELLIN_NOISE_CEILING)

    def subtracted(t: float) -> float:
        return sum(coeff * t ** exponent * math.log(t) ** log_power for exponent, log_power, coeff in singular)

    def head(t: float) -> float:
        return math.exp(-t * c * c) * (float(np.real(G(t))) - subtracted(t)) / t

    def damping_remainder(t: float) -> float:
        x = t * c * c
        return sum(
            coeff * t ** (exponent - 1.0) * math.log(t) ** log_power * _exp_remainder(x, _taylor_order(exponent))
            for exponent, log_power, coeff in singular
        )

    def tail(t: float) -> float:
        return math.exp(-t * c * c) * float(np.real(G(t))) / t

    options = {
        "limit": settings.MELLIN_QUAD_LIMIT,
        "epsabs": settings.MELLIN_TOLERANCE,
        "epsrel": settings.MELLIN_TOLERANCE,
    }
    near, near_error = integrate.quad(head, cutoff, 1.0, **options)[:2]
    if c > 0 and singular:
        smooth, smooth_error = integrate.quad(damping_remainder, 0.0, 1.0, **options)[:2]
        near, near_error = near + smooth, near_error + smooth_error
    far, far_error = integrate.quad(tail, 1.0, np.inf, **options)[:2]

    if near_error > settings.MELLIN_MAX_ERROR * max(1.0, abs(near)) or not math.isfinite(near):
        logger.error(f"Mellin head integral did not converge: error estimate {near_error:.3e}")
        raise MissingExpansionError(
            f"Subtracted integrand on [0, 1] did not converge (error estimate {near_error:.3e})."
        )
    if far_error > settings.MELLIN_MAX_ERROR * max(1.0, abs(far)):
        logger.error(f"Mellin tail integral did not converge: error estimate {far_error:.3e}")
        raise DomainError(f"Integral over [1, inf) did not converge (error estimate {far_error:.3e}).")

    return near + far + sum(_pole_contribution(*term) for term in _damped_terms(expansion, c))


def _spectral_integral(integrand: Callable[[float], float]) -> float:
    settings = get_settings()
    value, _ = integrate.quad(
        integrand, 0.0, np.inf, limit=settings.MELLIN_QUAD_LIMIT, epsabs=settings.MELLIN_TOLERANCE
    )
    return 2.0 * value


def mellin_reg_spectral(terms: DigammaTermList, c: float) -> complex:
    """
    The same regularised derivative computed on the lambda side as
    -(1/pi) * integral of terms(lambda) log(c^2 + lambda^2).

    For psi(a + i b lambda) the growth log(b |lambda|) is split off and its regularised value
    4c(1 - log 2c) - 2c log b is added analytically; the remainder decays like lambda^-2.
    """
    if not c > 0:
        raise DomainError("mellin_reg_spectral requires c > 0.")

    def log_weight(lam: float) -> float:
        return math.log(c * c + lam * lam)

    value = -2.0 * c * terms.constant
    for term in terms.psi_terms:
        def remainder(lam: float, a=term.a, b=term.b) -> float:
            even = float(np.real(digamma(a + 1j * b * lam)))
            return (even - 0.5 * log_weight(lam) - math.log(b)) * log_weight(lam)

        growth = 4.0 * c * (1.0 - math.log(2.0 * c)) - 2.0 * c * math.log(term.b)
        value += term.c * (growth - _spectral_integral(remainder) / math.pi)

    for term in terms.rational_terms:
        def kernel(lam: float, d=term.d, e=term.e) -> float:
            return d / (d * d + e * e * lam * lam) * log_weight(lam)

        value -= term.c * _spectral_integral(kernel) / math.pi
    return complex(value)
