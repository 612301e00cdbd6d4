from fractions import Fraction
from itertools import combinations
from typing import Sequence, Tuple

from exceptions import IndexOutOfRangeError, InvalidWeightError
from schemas.lie import GHighestWeight, MHighestWeight


def half_sum(n: int) -> Tuple[int, ...]:
    """rho_j = n + 1 - j for j = 1..n+1."""
    return tuple(n + 1 - j for j in range(1, n + 2))


def _type_d_dimension(coeffs: Sequence[int], rho: Sequence[int]) -> int:
    """Weyl dimension formula over the positive roots e_i +- e_j of type D."""
    shifted = [k + r for k, r in zip(coeffs, rho)]
    value = Fraction(1)
    for i, j in combinations(range(len(rho)), 2):
        value *= Fraction(
            (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]),
            (rho[i] - rho[j]) * (rho[i] + rho[j]),
        )
    if value.denominator != 1:
        raise InvalidWeightError(f"Weyl dimension {value} is not integral for {tuple(coeffs)}.")
    return int(value)


def ray_weight(base: GHighestWeight, m: int) -> GHighestWeight:
    """tau(m): every coordinate of the base weight shifted by m."""
    if m < 0:
        raise InvalidWeightError("Ray parameter m must be nonnegative.")
    return GHighestWeight(n=base.n, coeffs=tuple(value + m for value in base.coeffs))


def _check_index(tau: GHighestWeight, k: int) -> None:
    if not 0 <= k <= tau.n:
        raise IndexOutOfRangeError(f"Index k = {k} outside 0..{tau.n}.")


def sigma_tau_k(tau: GHighestWeight, k: int) -> MHighestWeight:
    """sigma_{tau,k} = (tau_2 + 1, ..., tau_{k+1} + 1, tau_{k+2}, ..., tau_{n+1})."""
    _check_index(tau, k)
    tail = tau.coeffs[1:]
    return MHighestWeight(
        n=tau.n,
        coeffs=tuple(value + 1 for value in tail[:k]) + tuple(tail[k:]),
    )


def lambda_tau_k(tau: GHighestWeight, k: int) -> int:
    """lambda_{tau,k} = tau_{k+1} + n - k."""
    _check_index(tau, k)
    return tau.coeffs[k] + tau.n - k


def casimir_eigenvalue(tau: GHighestWeight) -> int:
    """tau(Omega) = sum_j (k_j + rho_j)^2 - sum_j rho_j^2."""
    rho = half_sum(tau.n)
    return sum((k + r) ** 2 for k, r in zip(tau.coeffs, rho)) - sum(r * r for r in rho)


def weyl_dim(tau: GHighestWeight) -> int:
    return _type_d_dimension(tau.coeffs, half_sum(tau.n))


def m_weyl_dim(sigma: MHighestWeight) -> int:
    """Dimension of an SO(2n) representation; 1 for n = 1."""
    return _type_d_dimension(sigma.coeffs, tuple(range(sigma.n - 1, -1, -1)))
