import os
from functools import lru_cache
from typing import TYPE_CHECKING

from fastapi import Depends

from config.settings import TestingSettings, Settings, BaseAppSettings

if TYPE_CHECKING:
    from mellin.interfaces import CPsiCalibratorInterface


@lru_cache
def get_settings() -> BaseAppSettings:
    """
    Retrieve the application settings based on the current environment.

    This function reads the 'ENVIRONMENT' environment variable (defaulting to 'developing' if not set)
    and returns a corresponding settings instance. If the environment is 'testing', it returns an instance
    of TestingSettings; otherwise, it returns an instance of Settings.

    Returns:
        BaseAppSettings: The settings instance appropriate for the current environment.
    """
    environment = os.getenv("ENVIRONMENT", "developing")
    if environment == "testing":
        return TestingSettings()
    return Settings()


def get_c_psi_calibrator(
    settings: BaseAppSettings = Depends(get_settings)
) -> "CPsiCalibratorInterface":
    """
    Create the calibrator that pins the digamma regularisation constant C(psi).

    The calibrator evaluates the regularised Mellin transform of a digamma kernel numerically at the
    reference triples listed in the settings and checks that the extracted constant does not depend on
    the triple. The calibrated value is cached process-wide, so repeated requests are cheap.

    Args:
        settings (BaseAppSettings, optional): The application settings,
        provided via dependency injection from `get_settings`.

    Returns:
        CPsiCalibratorInterface: A calibrator configured with the reference triples and tolerance.
    """
    from mellin.calibration import NumericCPsiCalibrator

    return NumericCPsiCalibrator(
        reference_triples=settings.CALIBRATION_TRIPLES,
        spread_tolerance=settings.CALIBRATION_SPREAD,
    )
