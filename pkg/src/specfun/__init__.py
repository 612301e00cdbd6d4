from specfun.gamma import (
    digamma,
    log_gamma,
    erfc,
    erfcx
)
from specfun.series import (
    b_series,
    b_closed
)
from specfun.quadrature import gauss_integral
