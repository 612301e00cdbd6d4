from config.settings import BaseAppSettings
from config.dependencies import (
    get_settings,
    get_c_psi_calibrator
)
