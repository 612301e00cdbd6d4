from fastapi import APIRouter, Depends, HTTPException
from fastapi.concurrency import run_in_threadpool

from config import get_c_psi_calibrator
from exceptions import BaseLieError, BaseMellinError, BaseSpecialFunctionError, BaseTorsionError
from lie import ray_weight
from mellin.interfaces import CPsiCalibratorInterface
from schemas import (
    CPsiResponse,
    HeatTermSet,
    HeatTermsRequest,
    ReportConfig,
    TorsionReport
)
from torsion import k_heat_ft, run_report

router = APIRouter()

NUMERICAL_ERRORS = (BaseLieError, BaseSpecialFunctionError, BaseMellinError, BaseTorsionError)


@router.post(
    "/report",
    response_model=TorsionReport,
    summary="Compute the contribution table along a ray tau(m)",
    description=(
            "<h3>Computes, for every m in the requested range, dim tau(m), the rates lambda_{tau(m),k} "
            "and the identity, cusp-identity and cuspidal elliptic Mellin contributions, then fits "
            "their growth laws. Columns that are not available for the given rank are omitted "
            "with a reason.</h3>"
    ),
    responses={
        422: {
            "description": "Invalid configuration or numerical failure.",
            "content": {
                "application/json": {
                    "example": {"detail": "C(psi) calibration is unstable across reference triples."}
                }
            },
        }
    }
)
async def create_report(
        config: ReportConfig,
        calibrator: CPsiCalibratorInterface = Depends(get_c_psi_calibrator),
) -> TorsionReport:
    """
    Build a torsion report for the posted orbifold configuration.

    The calibrated constant C(psi) is only requested when the configuration has cusps or
    cuspidal elliptic classes and n = 1.

    :param config: Orbifold data together with the m-range.
    :type config: ReportConfig
    :param calibrator: Provider of C(psi) (injected via `get_c_psi_calibrator`).
    :type calibrator: CPsiCalibratorInterface

    :return: The per-m rows, growth fits and omitted columns.
    :rtype: TorsionReport

    :raises HTTPException: 422 on numerical failure.
    """
    try:
        c_psi = None
        if config.n == 1 and (config.kappa > 0 or config.cusp_elliptic):
            c_psi = await run_in_threadpool(calibrator.get_c_psi)
        return await run_in_threadpool(run_report, config, c_psi, 1, False)
    except NUMERICAL_ERRORS as error:
        raise HTTPException(status_code=422, detail=str(error))


@router.post(
    "/heat-terms",
    response_model=HeatTermSet,
    summary="Heat-kernel decomposition of tau(m)",
    description="<h3>Returns sign, rate lambda_{tau(m),k}^2 and sigma_{tau(m),k} for k = 0..n.</h3>",
)
async def get_heat_terms(request: HeatTermsRequest) -> HeatTermSet:
    try:
        return k_heat_ft(ray_weight(request.base_tau, request.m))
    except NUMERICAL_ERRORS as error:
        raise HTTPException(status_code=422, detail=str(error))


@router.get(
    "/c-psi",
    response_model=CPsiResponse,
    summary="Calibrated digamma regularisation constant",
)
async def get_c_psi(
        calibrator: CPsiCalibratorInterface = Depends(get_c_psi_calibrator),
) -> CPsiResponse:
    """
    Return C(psi) as pinned by the configured calibrator.

    :raises HTTPException: 422 if the calibration is unstable.
    """
    try:
        return CPsiResponse(c_psi=await run_in_threadpool(calibrator.get_c_psi))
    except BaseMellinError as error:
        raise HTTPException(status_code=422, detail=str(error))
