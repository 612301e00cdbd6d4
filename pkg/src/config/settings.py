import os
from pathlib import Path
from typing import Any

from pydantic_settings import BaseSettings


class BaseAppSettings(BaseSettings):
    BASE_DIR: Path = Path(__file__).parent.parent
    PATH_TO_MODEL_CONFIG: str = str(BASE_DIR / "torsion" / "data" / "model_orbifold.json")

    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    SHOW_PROGRESS: bool = os.getenv("SHOW_PROGRESS", "True").lower() == "true"
    DEFAULT_JOBS: int = int(os.getenv("DEFAULT_JOBS", 1))
    SIGNIFICANT_DIGITS: int = 12

    DIGAMMA_RECURRENCE_THRESHOLD: float = 10.0

    B_SERIES_GROUPS: int = int(os.getenv("B_SERIES_GROUPS", 2000))
    B_SERIES_TAIL_ORDER: int = 12
    B_SERIES_MAX_GROUPS: int = 500_000

    GAUSS_CUTOFF: float = 7.0
    GAUSS_PANELS: int = 48
    GAUSS_NODES: int = 24
    GAUSS_MAX_LEVELS: int = 4
    GAUSS_TOLERANCE: float = 1e-11

    MELLIN_QUAD_LIMIT: int = 400
    MELLIN_TOLERANCE: float = 1e-10
    MELLIN_MAX_ERROR: float = 1e-6
    MELLIN_NOISE_CEILING: float = 1e6

    CALIBRATION_TRIPLES: list[tuple[float, float, float]] = [
        (1.0, 1.0, 1.0),
        (2.0, 1.0, 1.0),
        (1.0, 0.5, 2.0),
    ]
    CALIBRATION_SPREAD: float = 1e-5

    FIT_GRID_EXPONENTS: tuple[int, int] = (8, 20)
    FIT_MAX_CONDITION: float = 1e14

    PLANCHEREL_NORMALIZATION: float = 1.0


class Settings(BaseAppSettings):
    B_SERIES_GROUPS: int = int(os.getenv("B_SERIES_GROUPS", 4000))


class TestingSettings(BaseAppSettings):
    LOG_LEVEL: str = "WARNING"

    def model_post_init(self, __context: dict[str, Any] | None = None) -> None:
        object.__setattr__(self, "SHOW_PROGRESS", False)
        object.__setattr__(self, "DEFAULT_JOBS", 1)
