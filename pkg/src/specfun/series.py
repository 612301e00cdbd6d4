import logging
import math

import numpy as np
from scipy import special

from config import get_settings
from exceptions import DigammaPoleError, DomainError, SeriesDivergenceError
from schemas.specfun import RootOfUnity
from specfun.gamma import digamma

logger = logging.getLogger(__name__)


def _check_pole(s: complex) -> None:
    if s.imag == 0 and s.real <= -1 and s.real == round(s.real):
        raise DigammaPoleError(f"b(s, z) has a pole at s = {s.real:g}.")


def b_series(s: complex, z: RootOfUnity) -> complex:
    """
    Direct summation of b(s, z) = sum_{n>=1} z^n / (n + s) for a root of unity z != 1.

    Terms are grouped over full periods of z, which makes every group O(r^-2). The first
    groups are summed directly; the remaining tail is expanded in powers of 1/r and summed
    with the Hurwitz zeta function. The head covers at least `B_SERIES_GROUPS` groups and at
    least 4 max_j |x_j| groups, so the tail expansion converges with ratio at most 1/4.

    :param s: Complex shift; s + n must not vanish for n >= 1.
    :param z: Root of unity of order m >= 2.
    :return: The value of the conditionally convergent series.
    :raises SeriesDivergenceError: If z = 1.
    :raises DigammaPoleError: If s is a negative integer.
    :raises DomainError: If |s| needs more than `B_SERIES_MAX_GROUPS` head groups.
    """
    if z.is_one:
        raise SeriesDivergenceError()
    s = complex(s)
    _check_pole(s)

    settings = get_settings()
    m = z.m
    x = (np.arange(1, m + 1) + s) / m
    groups = max(settings.B_SERIES_GROUPS, math.ceil(4.0 * float(np.max(np.abs(x)))))
    if groups > settings.B_SERIES_MAX_GROUPS:
        raise DomainError(
            f"b_series needs {groups} head groups at s = {s}, above the limit {settings.B_SERIES_MAX_GROUPS}."
        )
    phases = np.exp(2j * np.pi * z.p * np.arange(1, m + 1) / m)

    n = np.arange(1, groups * m + 1)
    head = np.sum(np.tile(phases, groups) / (n + s))

    # group r >= groups: (1/m) sum_j z^j / (r + x_j),  x_j = (j + s) / m
    tail = 0j
    for k in range(1, settings.B_SERIES_TAIL_ORDER + 1):
        moment = np.sum(phases * x ** k)
        tail += (-1) ** k * moment * special.zeta(k + 1, groups)
    tail /= m
    return complex(head + tail)


def b_closed(s: complex, m: int, p: int = 1) -> complex:
    """
    Digamma closed form of b(s, exp(2 pi i p / m)).

    Summing the series over full periods gives

        b(s, z) = -(1/m) sum_{j=1}^{m} z^j psi((s + j) / m),

    which for m = 2 is (psi(s/2 + 1/2) - psi(s/2 + 1)) / 2. Non-primitive roots are reduced to
    their exact order first.
    """
    root = RootOfUnity(m=m, p=p)
    if root.is_one:
        raise SeriesDivergenceError()
    s = complex(s)
    _check_pole(s)
    j = np.arange(1, root.m + 1)
    phases = np.exp(2j * np.pi * root.p * j / root.m)
    return complex(-np.sum(phases * digamma((s + j) / root.m)) / root.m)
