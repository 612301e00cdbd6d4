from mellin.closed import (
    zeta_rational_closed,
    zeta_digamma_closed,
    mellin_power_closed,
    zeta_term_list_closed
)
from mellin.expansion import (
    small_t_expansion_rational,
    digamma_kernel_expansion,
    term_list_expansion,
    small_t_expansion_digamma
)
from mellin.regularize import kernel_heat_trace, mellin_reg_numeric, mellin_reg_spectral
from mellin.calibration import calibrate_c_psi, estimate_c_psi, NumericCPsiCalibrator
from mellin.interfaces import CPsiCalibratorInterface
