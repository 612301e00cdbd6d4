from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from schemas.orbital import DigammaTermList, PsiTerm, RationalTerm

RawPsiTerm = Tuple[complex, Fraction, Fraction]

_NEGLIGIBLE = 1e-15


def _merge_raw(raw_terms: Iterable[RawPsiTerm]) -> Dict[Tuple[Fraction, Fraction], complex]:
    merged: Dict[Tuple[Fraction, Fraction], complex] = {}
    for c, a, slope in raw_terms:
        key = (Fraction(a), Fraction(slope))
        merged[key] = merged.get(key, 0j) + complex(c)
    return merged


def normalize_terms(raw_terms: Iterable[RawPsiTerm], constant: complex = 0j) -> DigammaTermList:
    """
    Bring raw terms c * psi(a + i B lambda), with exact rational a and B != 0, into a DigammaTermList.

    Terms with equal (a, B) are merged first. Every a <= 0 is moved into range with
    psi(z) = psi(z + 1) - 1/z, which deposits rational terms -c / (i B lambda + a). A deposit
    with a = 0 is odd in lambda and is dropped. The remaining deposits and the psi terms with
    B < 0 are reflected lambda -> -lambda so that all stored d, e and b are positive.

    The result has the same even part as the raw sum, which is all a Gaussian integral over
    the real line sees.
    """
    psi_terms: List[PsiTerm] = []
    rational_terms: List[RationalTerm] = []

    for (a, slope), c in _merge_raw(raw_terms).items():
        if abs(c) < _NEGLIGIBLE:
            continue
        if slope == 0:
            raise ValueError("Raw digamma term needs a nonzero lambda coefficient.")

        while a <= 0:
            if a < 0:
                # -c / (i B lambda + a) reflects to c / (i |B| lambda + |a|)
                rational_terms.append(RationalTerm(c=c, d=float(-a), e=float(abs(slope))))
            a += 1

        psi_terms.append(PsiTerm(c=c, a=float(a), b=float(abs(slope))))

    return DigammaTermList(
        psi_terms=tuple(psi_terms),
        rational_terms=tuple(rational_terms),
        constant=complex(constant),
    )
