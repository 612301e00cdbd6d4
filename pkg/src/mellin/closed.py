import math

import numpy as np
from scipy import special

from exceptions import DomainError
from schemas.orbital import DigammaTermList
from specfun import log_gamma


def zeta_rational_closed(c: float, d: float, e: float) -> float:
    """
    Regularised derivative at s = 0 for the kernel 1 / (i e lambda + d):

        -(2 / e) * log(c + d / e)

    :raises DomainError: If any parameter is not positive.
    """
    if not (c > 0 and d > 0 and e > 0):
        raise DomainError("zeta_rational_closed requires c, d, e > 0.")
    return -2.0 / e * math.log(c + d / e)


def zeta_digamma_closed(c: float, a: float, b: float, c_psi: float) -> float:
    """
    Regularised derivative at s = 0 for the kernel psi(a + i b lambda):

        -(2 / b) * log Gamma(a + c b) + (C(psi) + (2a - 1) log b) / b

    The b-dependent constant follows from lambda -> b lambda; for b = 1 it is C(psi) itself.

    :raises DomainError: If b <= 0, c < 0 or a + c b <= 0.
    """
    if not b > 0 or c < 0 or not a + c * b > 0:
        raise DomainError("zeta_digamma_closed requires b > 0, c >= 0 and a + c b > 0.")
    return -2.0 / b * log_gamma(a + c * b) + (c_psi + (2.0 * a - 1.0) * math.log(b)) / b


def mellin_power_closed(alpha: float, c: float, log_power: int = 0) -> float:
    """
    d/ds at s = 0 of (1/Gamma(s)) * integral of t^(s - 1 + alpha) (log t)^log_power exp(-t c^2).

    Gamma(alpha) c^(-2 alpha) for log_power = 0 (-2 log c at alpha = 0), and its alpha-derivative
    Gamma(alpha) c^(-2 alpha) (psi(alpha) - 2 log c) for log_power = 1.
    """
    if not c > 0:
        raise DomainError("mellin_power_closed requires c > 0.")
    if alpha <= 0 and float(alpha).is_integer():
        if alpha == 0 and log_power == 0:
            return -2.0 * math.log(c)
        raise DomainError(f"No finite regularised value at alpha = {alpha:g}, log power {log_power}.")

    value = special.gamma(alpha) * c ** (-2.0 * alpha)
    if log_power == 0:
        return float(value)
    if log_power == 1:
        return float(value * (special.digamma(alpha) - 2.0 * math.log(c)))
    raise DomainError("Only log powers 0 and 1 are supported.")


def zeta_term_list_closed(terms: DigammaTermList, c: float, c_psi: float) -> complex:
    """Closed-form regularised derivative of t -> (1/pi) * integral of terms(lambda) exp(-t lambda^2)."""
    value = terms.constant * mellin_power_closed(-0.5, c) / np.sqrt(np.pi)
    for term in terms.psi_terms:
        value += term.c * zeta_digamma_closed(c, term.a, term.b, c_psi)
    for term in terms.rational_terms:
        value += term.c * zeta_rational_closed(c, term.d, term.e)
    return complex(value)
