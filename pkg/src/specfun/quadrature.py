import logging
from functools import lru_cache
from typing import Callable, Union

import numpy as np

from config import get_settings
from exceptions import DomainError, QuadratureError

logger = logging.getLogger(__name__)

Integrand = Union[Callable[[np.ndarray], np.ndarray], "DigammaTermList"]  # noqa: F821


@lru_cache(maxsize=16)
def _panel_rule(panels: int, nodes: int, cutoff: float) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule on [0, cutoff], panels graded geometrically towards 0."""
    edges = np.concatenate(([0.0], np.geomspace(1e-9, cutoff, panels)))
    x, w = np.polynomial.legendre.leggauss(nodes)
    left, right = edges[:-1, None], edges[1:, None]
    half = 0.5 * (right - left)
    points = (left + half * (x[None, :] + 1.0)).ravel()
    weights = (half * w[None, :]).ravel()
    return points, weights


def _as_callable(f: Integrand) -> Callable[[np.ndarray], np.ndarray]:
    evaluate = getattr(f, "evaluate", None)
    return evaluate if evaluate is not None else f


def gauss_integral(f: Integrand, t: float) -> complex:
    """
    Integral of f(lambda) exp(-t lambda^2) over the real line.

    With lambda = u / sqrt(t) the integral becomes t^(-1/2) times the integral of
    (f(u/sqrt t) + f(-u/sqrt t)) exp(-u^2) over [0, GAUSS_CUTOFF]. The composite rule is
    refined by doubling its panel count until two successive levels agree.

    :param f: A DigammaTermList or a callable vectorised over numpy arrays.
    :param t: Gaussian parameter, t > 0.
    :return: The complex value of the integral.
    :raises DomainError: If t <= 0.
    :raises QuadratureError: If the refinement does not converge.
    """
    if not t > 0:
        raise DomainError("gauss_integral requires t > 0.")

    settings = get_settings()
    integrand = _as_callable(f)
    scale = 1.0 / np.sqrt(t)

    previous = None
    panels = settings.GAUSS_PANELS
    for _ in range(settings.GAUSS_MAX_LEVELS + 1):
        u, w = _panel_rule(panels, settings.GAUSS_NODES, settings.GAUSS_CUTOFF)
        lam = u * scale
        values = np.asarray(integrand(lam), dtype=complex) + np.asarray(integrand(-lam), dtype=complex)
        current = complex(scale * np.sum(w * values * np.exp(-u * u)))
        if previous is not None and abs(current - previous) <= settings.GAUSS_TOLERANCE * max(1.0, abs(current)):
            return current
        previous = current
        panels *= 2

    logger.error(f"gauss_integral did not converge at t={t:g}")
    raise QuadratureError(f"gauss_integral did not converge at t = {t:g}.")
