from orbital.terms import normalize_terms
from orbital.omega import (
    decompose_identity,
    omega_identity,
    omega_cusp_so13,
    decompose_cusp,
    omega_cusp_symmetric,
    identity_omega,
    cusp_omega,
    theta_ft_heat
)
