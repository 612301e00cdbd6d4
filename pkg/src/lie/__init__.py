from lie.weights import (
    half_sum,
    ray_weight,
    sigma_tau_k,
    lambda_tau_k,
    casimir_eigenvalue,
    weyl_dim,
    m_weyl_dim
)
from lie.characters import m_character
