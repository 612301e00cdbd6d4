import cmath

import numpy as np

from exceptions import SingularElementError
from schemas.lie import EllipticClass, MHighestWeight


def m_character(sigma: MHighestWeight, gamma: EllipticClass) -> complex:
    """
    Character of the SO(2n) representation sigma at the torus element of gamma.

    The element rotates the j-th plane by theta_j = 2 phi_j. For n = 1 this is
    exp(2 i phi k_2); for n >= 2 the Weyl character formula of type D_n,

        (det[x_j^l_i + x_j^-l_i] + det[x_j^l_i - x_j^-l_i]) / det[x_j^rho_i + x_j^-rho_i],

    with l = Lambda + rho and rho = (n-1, ..., 0), is evaluated.

    :raises SingularElementError: If the element is not regular.
    """
    if len(gamma.p) != sigma.n:
        raise ValueError(f"Elliptic class has {len(gamma.p)} angles, expected {sigma.n}.")

    if sigma.n == 1:
        return cmath.exp(2j * gamma.angles[0] * sigma.k2)

    theta = 2.0 * np.array(gamma.angles)
    rho = np.arange(sigma.n - 1, -1, -1)
    shifted = np.array(sigma.coeffs) + rho

    x_plus = np.exp(1j * np.outer(shifted, theta))
    x_minus = np.exp(-1j * np.outer(shifted, theta))
    denominator = np.linalg.det(np.exp(1j * np.outer(rho, theta)) + np.exp(-1j * np.outer(rho, theta)))
    if abs(denominator) < 1e-10:
        raise SingularElementError(f"Element with angles {gamma.angles} is not regular.")
    numerator = np.linalg.det(x_plus + x_minus) + np.linalg.det(x_plus - x_minus)
    return complex(numerator / denominator)
