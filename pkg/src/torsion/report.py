import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from config import get_settings
from exceptions import CapabilityError, DegenerateModelError
from lie import ray_weight, weyl_dim
from mellin import calibrate_c_psi
from schemas.torsion import (
    GrowthFit,
    GrowthModel,
    OrbifoldData,
    ReportConfig,
    TorsionReport,
    TorsionRow
)
from torsion.assembly import k_heat_ft, m_ecusp, m_i_identity, m_script_i
from torsion.fitting import MIN_POINTS, fit_growth

logger = logging.getLogger(__name__)

COLUMN_MODELS = {
    "MI": GrowthModel.M_DIM,
    "MEcusp": GrowthModel.M_LOG_M,
    "MsI": GrowthModel.M,
}


def compute_row(orb: OrbifoldData, c_psi: Optional[float], m: int) -> Tuple[TorsionRow, Dict[str, str]]:
    """
    All columns of one report row. A capability error empties its column and is returned
    as the omission reason instead of being raised.
    """
    tau_m = ray_weight(orb.base_tau, m)
    row = TorsionRow(
        m=m,
        dim=weyl_dim(tau_m),
        lambdas=[term.lam for term in k_heat_ft(tau_m).terms],
    )
    columns = {
        "MI": lambda: m_i_identity(tau_m, orb),
        "MsI": lambda: m_script_i(tau_m, orb, c_psi),
        "MEcusp": lambda: m_ecusp(tau_m, orb, c_psi),
    }
    omitted: Dict[str, str] = {}
    for name, evaluate in columns.items():
        try:
            setattr(row, name, evaluate())
        except CapabilityError as error:
            omitted[name] = str(error)
    return row, omitted


class TorsionReportBuilder:
    """
    Builds the per-m table of trace-formula contributions along a ray tau(m) and the growth
    fits of its columns.
    """

    def __init__(
            self,
            config: ReportConfig,
            c_psi: Optional[float] = None,
            jobs: Optional[int] = None,
            show_progress: Optional[bool] = None
    ) -> None:
        """
        :param config: Orbifold data plus the m-range.
        :param c_psi: Calibrated C(psi); calibrated on demand when omitted and needed.
        :param jobs: Number of worker processes for the per-m computations.
        :param show_progress: Whether to display a tqdm progress bar.
        """
        settings = get_settings()
        self._config = config
        self._c_psi = c_psi
        self._jobs = jobs or settings.DEFAULT_JOBS
        self._show_progress = settings.SHOW_PROGRESS if show_progress is None else show_progress

    def _needs_c_psi(self) -> bool:
        return self._config.n == 1 and (self._config.kappa > 0 or bool(self._config.cusp_elliptic))

    def _compute_rows(self) -> Tuple[List[TorsionRow], Dict[str, str]]:
        task = partial(compute_row, self._config.orbifold, self._c_psi)
        m_values = list(self._config.m_range)
        progress = dict(total=len(m_values), desc="tau(m)", disable=not self._show_progress)

        if self._jobs > 1:
            with ProcessPoolExecutor(max_workers=self._jobs) as executor:
                results = list(tqdm(executor.map(task, m_values, chunksize=4), **progress))
        else:
            results = [task(m) for m in tqdm(m_values, **progress)]

        rows: List[TorsionRow] = []
        omitted: Dict[str, str] = {}
        for row, reasons in results:
            rows.append(row)
            omitted.update(reasons)
        for name, reason in omitted.items():
            logger.info(f"Column {name} omitted: {reason}")
        return rows, omitted

    def _fit_columns(self, rows: List[TorsionRow], omitted: Dict[str, str]) -> List[GrowthFit]:
        fits: List[GrowthFit] = []
        dims = {row.m: row.dim for row in rows}
        for name, model in COLUMN_MODELS.items():
            if name in omitted:
                continue
            values = [(row.m, getattr(row, name)) for row in rows if row.m >= 1]
            if len(values) < MIN_POINTS:
                logger.info(f"Column {name}: {len(values)} points, growth fit skipped")
                continue
            try:
                fits.append(fit_growth(values, model, dims=dims, column=name))
            except DegenerateModelError as error:
                logger.error(f"Growth fit of {name} failed: {error}")
        return fits

    def build(self) -> TorsionReport:
        if self._c_psi is None and self._needs_c_psi():
            self._c_psi = calibrate_c_psi()

        rows, omitted = self._compute_rows()
        return TorsionReport(
            rows=rows,
            fits=self._fit_columns(rows, omitted),
            omitted=omitted,
            c_psi=self._c_psi,
        )


def run_report(
        config: ReportConfig,
        c_psi: Optional[float] = None,
        jobs: Optional[int] = None,
        show_progress: Optional[bool] = None
) -> TorsionReport:
    return TorsionReportBuilder(config, c_psi=c_psi, jobs=jobs, show_progress=show_progress).build()


def report_frame(report: TorsionReport) -> pd.DataFrame:
    """One row per m with columns m, dim, lambda_0..lambda_n, MI, MsI, MEcusp."""
    records = []
    for row in report.rows:
        record = {"m": row.m, "dim": row.dim}
        record.update({f"lambda_{k}": lam for k, lam in enumerate(row.lambdas)})
        record.update({"MI": row.MI, "MsI": row.MsI, "MEcusp": row.MEcusp})
        records.append(record)
    frame = pd.DataFrame.from_records(records)
    if frame.empty:
        return frame
    columns = ["m", "dim"] + [c for c in frame.columns if c.startswith("lambda_")] + ["MI", "MsI", "MEcusp"]
    return frame[columns]


def _significant(value, digits: int):
    if isinstance(value, float):
        return float(f"{value:.{digits}g}") if math.isfinite(value) else None
    if isinstance(value, dict):
        return {key: _significant(item, digits) for key, item in value.items()}
    if isinstance(value, list):
        return [_significant(item, digits) for item in value]
    return value


def report_json(report: TorsionReport) -> dict:
    return _significant(report.model_dump(mode="json"), get_settings().SIGNIFICANT_DIGITS)


def write_report(report: TorsionReport, path: Path, output_format: str = "csv") -> None:
    """Serialise the report as CSV (rows only) or JSON (rows and fit block)."""
    digits = get_settings().SIGNIFICANT_DIGITS
    path = Path(path)
    if output_format == "csv":
        report_frame(report).to_csv(path, index=False, float_format=f"%.{digits}g")
    elif output_format == "json":
        path.write_text(json.dumps(report_json(report), indent=2))
    else:
        raise ValueError(f"Unknown output format: {output_format}")
    logger.info(f"Report with {len(report.rows)} rows written to {path}")


def load_report_config(path: Path) -> ReportConfig:
    """Read a report configuration from a JSON file."""
    return ReportConfig.model_validate_json(Path(path).read_text())
