import math

import numpy as np
import pytest
import pytest_asyncio
from httpx import AsyncClient, ASGITransport

from config import get_settings, get_c_psi_calibrator
from main import app
from mellin import calibrate_c_psi
from schemas import EllipticClass, GHighestWeight, OrbifoldData, ReportConfig
from tests.doubles.fakes.calibration import RecordingCPsiCalibrator
from tests.doubles.stubs.calibration import StubCPsiCalibrator


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "e2e: End-to-end tests"
    )
    config.addinivalue_line(
        "markers", "unit: Unit tests"
    )
    config.addinivalue_line(
        "markers", "slow: Long-running numerical checks"
    )


@pytest.fixture(scope="session")
def settings():
    """
    Provide application settings.

    This fixture returns the application settings by calling get_settings().
    """
    return get_settings()


@pytest.fixture(scope="session")
def c_psi():
    """
    Provide the numerically calibrated constant C(psi).

    Calibration runs once per session; the value is cached inside the mellin package as well.
    """
    return calibrate_c_psi()


@pytest.fixture(scope="function")
def rng():
    """
    Provide a seeded numpy generator so random parameter draws are reproducible.
    """
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def model_orbifold():
    """
    The model orbifold: n = 1, one cusp, one cuspidal elliptic class of order 2,
    volume 1 and ray base tau = (1, 1).
    """
    return OrbifoldData(
        n=1,
        volume=1.0,
        kappa=1,
        base_tau=GHighestWeight(n=1, coeffs=(1, 1)),
        cusp_elliptic=(EllipticClass(p=(1,), q=2, weight=1.0),),
    )


@pytest.fixture(scope="function")
def neat_config():
    """
    A report configuration without cusps or cuspidal elliptic classes.
    """
    return ReportConfig(n=1, volume=2.0, kappa=0, base_tau=[1, 1], m_min=1, m_max=12)


@pytest.fixture(scope="function")
def c_psi_stub():
    """
    Provide a stub calibrator returning the analytic constant log(2 pi).
    """
    return StubCPsiCalibrator(math.log(2.0 * math.pi))


@pytest.fixture(scope="function")
def recording_calibrator():
    """
    Provide a fake calibrator that records each request for C(psi).
    """
    return RecordingCPsiCalibrator()


@pytest_asyncio.fixture(scope="function")
async def client(recording_calibrator):
    """
    Provide an asynchronous HTTP client for testing.

    Overrides the C(psi) calibrator with a recording fake.
    """
    app.dependency_overrides[get_c_psi_calibrator] = lambda: recording_calibrator

    async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as async_client:
        yield async_client

    app.dependency_overrides.clear()
