import logging
import math
from typing import Dict, List, Tuple

import numpy as np
from scipy import special

from config import get_settings
from exceptions import DomainError, ExpansionFitError
from schemas.mellin import HeatExpansion
from schemas.orbital import DigammaTermList
from specfun import gauss_integral

logger = logging.getLogger(__name__)

MAX_RATIONAL_ORDER = 8


def _place_half_power(k: int) -> Tuple[str, int]:
    """Family and index of t^(k/2): integer powers for even k, t^(j - 1/2) otherwise."""
    if k % 2 == 0:
        return "integer_powers", k // 2
    return "half_powers", (k + 1) // 2


def small_t_expansion_rational(c: complex, d: float, e: float, order: int = MAX_RATIONAL_ORDER) -> HeatExpansion:
    """
    Small-t expansion of the integral of c / (i e lambda + d) * exp(-t lambda^2) over the real line.

    Only the even part c d / (d^2 + e^2 lambda^2) survives, which integrates to
    pi (c / e) erfcx((d / e) sqrt(t)). The power series erfcx(x) = sum_k (-x)^k / Gamma(k/2 + 1)
    gives a pure t^(k/2) expansion with no logarithms.

    :param c: Numerator of the rational kernel.
    :param order: Highest k kept, at most 8.
    """
    if not (d > 0 and e > 0):
        raise DomainError("Rational kernel requires d, e > 0.")
    if not 0 <= order <= MAX_RATIONAL_ORDER:
        raise DomainError(f"Rational expansion order must lie in 0..{MAX_RATIONAL_ORDER}.")

    families: Dict[str, List[Tuple[int, complex]]] = {"half_powers": [], "integer_powers": []}
    ratio = d / e
    for k in range(order + 1):
        family, index = _place_half_power(k)
        coeff = math.pi * c / e * (-ratio) ** k / special.gamma(k / 2 + 1)
        families[family].append((index, complex(coeff)))
    return HeatExpansion(
        half_powers=tuple(families["half_powers"]),
        integer_powers=tuple(families["integer_powers"]),
    )


def digamma_kernel_expansion(a: float, b: float, c: complex = 1.0) -> HeatExpansion:
    """
    Small-t expansion of the integral of c psi(a + i b lambda) exp(-t lambda^2), through t^(1/2).

    The even part of psi grows like log(b |lambda|) + (a^2/2 - a/2 + 1/12) / (b lambda)^2, and
    its deviation from log(b |lambda|) integrates to pi (a - 1/2) / b. Hence

        sqrt(pi) (psi(1/2)/2 + log b) t^(-1/2) - sqrt(pi)/2 t^(-1/2) log t
        + pi (a - 1/2) / b + sqrt(pi) (a - a^2 - 1/6) / b^2 t^(1/2) + O(t).
    """
    if not (a > 0 and b > 0):
        raise DomainError("Digamma kernel requires a, b > 0.")
    root_pi = math.sqrt(math.pi)
    return HeatExpansion(
        half_powers=(
            (0, complex(c * root_pi * (special.digamma(0.5) / 2 + math.log(b)))),
            (1, complex(c * root_pi * (a - a * a - 1.0 / 6.0) / b ** 2)),
        ),
        log_terms=((0, complex(-c * root_pi / 2)),),
        integer_powers=((0, complex(c * math.pi * (a - 0.5) / b)),),
    )


def term_list_expansion(terms: DigammaTermList) -> HeatExpansion:
    """Exact small-t expansion of gauss_integral(terms, t), complete through t^(1/2)."""
    expansion = HeatExpansion(half_powers=((0, complex(terms.constant * math.sqrt(math.pi))),))
    for term in terms.psi_terms:
        expansion = expansion + digamma_kernel_expansion(term.a, term.b, term.c)
    for term in terms.rational_terms:
        expansion = expansion + small_t_expansion_rational(term.c, term.d, term.e, order=2)
    return expansion


def small_t_expansion_digamma(terms: DigammaTermList, order: int = 4) -> HeatExpansion:
    """
    Fit the small-t expansion of gauss_integral(terms, t) on the dyadic grid t = 2^-k.

    The basis is t^(j/2) for j = -1..order, plus t^(-1/2) log t when digamma terms are present.
    Columns are normalised before the least-squares solve; the condition number of the scaled
    matrix is stored on the result.

    :raises ExpansionFitError: If the scaled matrix is too ill-conditioned or the fit misses
        gauss_integral at the two smallest grid points by more than 1e-6 (relative).
    """
    if order < 0:
        raise DomainError("Expansion order must be nonnegative.")
    settings = get_settings()
    low, high = settings.FIT_GRID_EXPONENTS
    t = 2.0 ** -np.arange(low, high + 1, dtype=float)
    values = np.array([gauss_integral(terms, point) for point in t])

    columns = []
    labels: List[Tuple[str, int]] = []
    if terms.psi_terms:
        columns.append(t ** -0.5 * np.log(t))
        labels.append(("log_terms", 0))
    for k in range(-1, order + 1):
        columns.append(t ** (k / 2))
        labels.append(_place_half_power(k))

    matrix = np.column_stack(columns)
    scale = np.linalg.norm(matrix, axis=0)
    scaled = matrix / scale
    condition = float(np.linalg.cond(scaled))
    if condition > settings.FIT_MAX_CONDITION:
        logger.error(f"Small-t fit ill-conditioned: cond={condition:.3e}")
        raise ExpansionFitError(f"Small-t fit is ill-conditioned (condition number {condition:.3e}).")

    solution, *_ = np.linalg.lstsq(scaled.astype(complex), values, rcond=None)
    coefficients = solution / scale

    fitted = matrix @ coefficients
    residual = np.max(np.abs(fitted[-2:] - values[-2:]) / np.abs(values[-2:]))
    if residual > 1e-6:
        logger.error(f"Small-t fit residual {residual:.3e} at the smallest grid points")
        raise ExpansionFitError(
            f"Small-t fit residual {residual:.3e} exceeds 1e-6 (condition number {condition:.3e})."
        )

    families: Dict[str, List[Tuple[int, complex]]] = {
        "half_powers": [], "log_terms": [], "integer_powers": []
    }
    for (family, index), coeff in zip(labels, coefficients):
        families[family].append((index, complex(coeff)))
    return HeatExpansion(
        half_powers=tuple(families["half_powers"]),
        log_terms=tuple(families["log_terms"]),
        integer_powers=tuple(families["integer_powers"]),
        condition_number=condition,
    )
