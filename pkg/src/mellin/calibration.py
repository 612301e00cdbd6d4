import logging
import math
from functools import lru_cache
from typing import Iterable, Optional, Tuple

from config import get_settings
from exceptions import CalibrationError
from mellin.expansion import term_list_expansion
from mellin.interfaces import CPsiCalibratorInterface
from mellin.regularize import kernel_heat_trace, mellin_reg_numeric
from schemas.orbital import DigammaTermList, PsiTerm
from specfun import log_gamma

logger = logging.getLogger(__name__)

Triple = Tuple[float, float, float]


def estimate_c_psi(c: float, a: float, b: float) -> float:
    """
    One estimate of C(psi) from the numerically regularised psi(a + i b lambda) kernel.

    Inverts zeta_digamma_closed: C = b Z + 2 log Gamma(a + c b) - (2a - 1) log b.
    """
    terms = DigammaTermList(psi_terms=(PsiTerm(c=1.0, a=a, b=b),))
    expansion = term_list_expansion(terms).scaled(1.0 / math.pi)
    value = mellin_reg_numeric(lambda t: kernel_heat_trace(terms, t), expansion, c)
    return b * value + 2.0 * log_gamma(a + c * b) - (2.0 * a - 1.0) * math.log(b)


@lru_cache(maxsize=8)
def _calibrate(reference_triples: Tuple[Triple, ...], spread_tolerance: float) -> float:
    estimates = [estimate_c_psi(*triple) for triple in reference_triples]
    spread = max(estimates) - min(estimates)
    if spread > spread_tolerance:
        logger.error(f"C(psi) estimates {estimates} spread by {spread:.3e}")
        raise CalibrationError(
            f"C(psi) estimates spread by {spread:.3e} across {len(estimates)} reference triples "
            f"(tolerance {spread_tolerance:.1e})."
        )
    value = estimates[0]
    logger.info(f"C(psi) calibrated to {value:.12f} (spread {spread:.2e})")
    return value


def calibrate_c_psi(
        reference_triples: Optional[Iterable[Triple]] = None,
        spread_tolerance: Optional[float] = None
) -> float:
    """
    Pin C(psi) numerically at the first reference triple (c, a, b) and check that the
    remaining triples reproduce it within `spread_tolerance`.

    The result is cached per argument set, so repeated and concurrent calls return the
    same constant.

    :raises CalibrationError: If the estimates spread beyond tolerance.
    """
    settings = get_settings()
    triples = tuple(
        tuple(float(x) for x in triple)
        for triple in (reference_triples or settings.CALIBRATION_TRIPLES)
    )
    tolerance = settings.CALIBRATION_SPREAD if spread_tolerance is None else spread_tolerance
    return _calibrate(triples, float(tolerance))


class NumericCPsiCalibrator(CPsiCalibratorInterface):

    def __init__(self, reference_triples: Iterable[Triple], spread_tolerance: float):
        self._reference_triples = tuple(reference_triples)
        self._spread_tolerance = spread_tolerance

    def get_c_psi(self) -> float:
        return calibrate_c_psi(self._reference_triples, self._spread_tolerance)
