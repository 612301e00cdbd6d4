import logging
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from exceptions import DegenerateModelError
from schemas.torsion import GrowthFit, GrowthModel

logger = logging.getLogger(__name__)

MIN_POINTS = 10


def model_column(model: GrowthModel, m: np.ndarray, dims: Optional[np.ndarray] = None) -> np.ndarray:
    """Regressor x(m) of the one-parameter law v = C x(m)."""
    if model == GrowthModel.M_DIM:
        if dims is None:
            raise DegenerateModelError("The m * dim model needs the dimensions of tau(m).")
        return m * dims
    if model == GrowthModel.M_LOG_M:
        return m * np.log(m)
    if model == GrowthModel.M:
        return m.astype(float)
    return np.log(m)


def _select(values: Sequence[Tuple[int, float]], window: Optional[Tuple[int, int]]):
    points = sorted(values)
    if window is None:
        points = points[min(len(points) // 2, max(0, len(points) - MIN_POINTS)):]
    else:
        low, high = window
        points = [(m, v) for m, v in points if low <= m <= high]
    if not points:
        raise DegenerateModelError("No points fall into the fit window.")
    m = np.array([point[0] for point in points], dtype=float)
    v = np.array([point[1] for point in points], dtype=float)
    return m, v


def fit_growth(
        values: Sequence[Tuple[int, float]],
        model: GrowthModel,
        dims: Optional[Mapping[int, int]] = None,
        window: Optional[Tuple[int, int]] = None,
        column: str = ""
) -> GrowthFit:
    """
    Least-squares fit of v(m) = C x(m) over a window of the m-range.

    :param values: Pairs (m, v).
    :param model: The growth law x(m).
    :param dims: dim tau(m) per m, needed for the m * dim model.
    :param window: Inclusive m-window; when omitted, the upper half of the points, extended
        downwards to at least 10 points.
    :param column: Report column the values came from.
    :return: Coefficient and maximal relative residual over the window.
    :raises DegenerateModelError: Fewer than 10 points in the window or a vanishing regressor.
    """
    m, v = _select(values, window)
    if m.size < MIN_POINTS:
        raise DegenerateModelError(f"fit_growth needs at least {MIN_POINTS} points in the window, got {m.size}.")
    if np.any(m < 1):
        raise DegenerateModelError("Growth models are defined for m >= 1 only.")
    dim_column = None if dims is None else np.array([dims[int(point)] for point in m], dtype=float)
    x = model_column(GrowthModel(model), m, dim_column)

    solution, _, rank, _ = np.linalg.lstsq(x[:, None], v, rcond=None)
    if rank == 0:
        raise DegenerateModelError(f"Model {model} has a vanishing regressor on the window.")
    coefficient = float(solution[0])

    misfit = np.abs(v - coefficient * x)
    scale = np.where(v != 0, np.abs(v), 1.0)
    residual = float(np.max(misfit / scale))

    fit = GrowthFit(
        column=column,
        model=model,
        coefficient=coefficient,
        max_relative_residual=residual,
        window=(int(m[0]), int(m[-1])),
    )
    logger.info(f"Fitted {column or 'values'} ~ {coefficient:.6g} * {fit.model.value} "
                f"on m in [{fit.window[0]}, {fit.window[1]}], residual {residual:.3e}")
    return fit


def bound_ratio_sup(
        values: Sequence[Tuple[int, float]],
        model: GrowthModel,
        windows: Tuple[Tuple[int, int], Tuple[int, int]] = ((50, 100), (100, 200)),
        dims: Optional[Mapping[int, int]] = None
) -> float:
    """
    sup |v| / x(m) over the second window divided by the same supremum over the first.

    A ratio near or below 1 means the bound |v| <= C x(m) holds with a stable constant.

    :raises DegenerateModelError: If the first window is empty or all its values vanish.
    """
    sups = []
    for window in windows:
        m, v = _select(values, window)
        dim_column = None if dims is None else np.array([dims[int(point)] for point in m], dtype=float)
        sups.append(float(np.max(np.abs(v) / model_column(GrowthModel(model), m, dim_column))))
    if sups[0] == 0.0:
        raise DegenerateModelError(f"All values vanish on the window {windows[0]}; the bound has no scale.")
    return sups[1] / sups[0]
