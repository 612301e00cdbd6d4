import logging

import numpy as np
from scipy import special

from config import get_settings
from exceptions import DigammaPoleError, DomainError

logger = logging.getLogger(__name__)

# B_2k / (2k) for k = 1..8
_ASYMPTOTIC_COEFFS = np.array([
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
])


def _is_pole(z: np.ndarray) -> np.ndarray:
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def digamma(z):
    """
    Complex digamma function psi(z).

    Arguments with negative real part are reflected with psi(z) = psi(1 - z) - pi cot(pi z).
    The argument is then shifted upwards with psi(z) = psi(z + 1) - 1/z until its real part
    reaches the recurrence threshold, and the asymptotic series

        psi(z) ~ log z - 1/(2z) - sum_k B_2k / (2k z^2k)

    is summed. Vectorised over array input.

    :param z: Complex scalar or array, not a nonpositive integer.
    :return: psi(z) with the shape of `z`.
    :raises DigammaPoleError: If any entry is a nonpositive integer.
    """
    z = np.array(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)

    if np.any(_is_pole(z)):
        raise DigammaPoleError(f"Digamma pole at z = {z[_is_pole(z)][0].real:g}.")

    reflect = z.real < 0
    correction = np.zeros_like(z)
    if reflect.any():
        # cot has period 1; reducing first keeps pi * z exact for large |Re z|
        reduced = z[reflect] - np.round(z[reflect].real)
        correction[reflect] = np.pi / np.tan(np.pi * reduced)
        z[reflect] = 1.0 - z[reflect]

    threshold = get_settings().DIGAMMA_RECURRENCE_THRESHOLD
    shift = np.zeros_like(z)
    steps = int(max(0.0, np.ceil(threshold - z.real.min())))
    for _ in range(steps):
        mask = z.real < threshold
        if not mask.any():
            break
        shift[mask] -= 1.0 / z[mask]
        z[mask] += 1.0

    inv2 = 1.0 / (z * z)
    series = np.zeros_like(z)
    for coeff in _ASYMPTOTIC_COEFFS[::-1]:
        series = (series + coeff) * inv2
    value = np.log(z) - 0.5 / z - series + shift - correction
    return complex(value[0]) if scalar else value


def log_gamma(x):
    """
    log Gamma(x) for real x > 0.

    :raises DomainError: If any argument is not positive.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("log_gamma requires x > 0.")
    value = special.gammaln(x)
    return float(value) if value.ndim == 0 else value


def erfc(x):
    """Complementary error function."""
    value = special.erfc(np.asarray(x, dtype=float))
    return float(value) if value.ndim == 0 else value


def erfcx(x):
    """Scaled complementary error function exp(x^2) erfc(x)."""
    value = special.erfcx(np.asarray(x, dtype=float))
    return float(value) if value.ndim == 0 else value
