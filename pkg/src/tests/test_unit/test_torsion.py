import json
import math

import numpy as np
import pandas as pd
import pytest

from exceptions import CapabilityError, DegenerateModelError, UncalibratedError
from lie import ray_weight, weyl_dim
from mellin import zeta_term_list_closed
from schemas import (
    DigammaTermList,
    EllipticClass,
    GHighestWeight,
    GrowthModel,
    OrbifoldData,
    PsiTerm,
    ReportConfig
)
from schemas.examples.torsion import torsion_row_example
from torsion import (
    bound_ratio_sup,
    fit_growth,
    k_heat_ft,
    load_report_config,
    m_ecusp,
    m_ecusp_numeric,
    m_i_identity,
    m_i_identity_numeric,
    m_script_i,
    m_script_i_numeric,
    plancherel_expansion,
    report_frame,
    run_report,
    write_report,
    TorsionReportBuilder
)
from torsion import checks
from torsion.report import compute_row
from torsion.checks import CHECKS, check_identity_leading_term, check_representation_arithmetic

EULER_GAMMA = 0.5772156649015329


def tau(m: int, base=(1, 1)) -> GHighestWeight:
    return ray_weight(GHighestWeight(n=len(base) - 1, coeffs=base), m)


def identity_closed_form(m: int, volume: float = 1.0) -> float:
    """MI along the ray through (1, 1): -2 pi vol (2 m^2 + 6 m + 13/3)."""
    return -2.0 * math.pi * volume * (2 * m * m + 6 * m + 13.0 / 3.0)


@pytest.mark.unit
def test_k_heat_ft_on_model_ray():
    """
    Test the heat terms of tau(3) = (4, 4): signs -1, +1, rates 25, 16, sigma = (4), (5).
    """
    terms = k_heat_ft(tau(3)).terms
    assert [term.sign for term in terms] == [-1, 1], "Signs must alternate starting at -1"
    assert [term.rate for term in terms] == [25, 16], "Rates lambda_{tau,k}^2"
    assert [term.sigma.coeffs for term in terms] == [(4,), (5,)], "M-types sigma_{tau,k}"


@pytest.mark.unit
def test_k_heat_ft_at_ray_base():
    """
    Test tau(0) = (1, 1): rates {4, 1} with signs -1, +1, and a rank-two example.
    """
    terms = k_heat_ft(tau(0)).terms
    assert [(term.sign, term.rate) for term in terms] == [(-1, 4), (1, 1)], "Unexpected heat terms"

    rank_two = k_heat_ft(tau(2, base=(3, 2, 1))).terms
    assert [term.sign for term in rank_two] == [-1, 1, -1], "Signs for n = 2"
    assert len({term.rate for term in rank_two}) == 3, "Rates must be distinct"


@pytest.mark.unit
def test_m_ecusp_vanishes_without_elliptic_classes():
    """
    Test that a neat orbifold has no cuspidal elliptic contribution, even without C(psi).
    """
    orb = OrbifoldData(n=1, volume=1.0, kappa=2, base_tau=[1, 1])
    assert m_ecusp(tau(4), orb, None) == 0.0, "Expected 0 for an empty class list"


@pytest.mark.unit
def test_single_digamma_term_closed_form(c_psi):
    """
    Test the closed form of a single term psi(1 + i lambda) at lambda_k = 5: -2 log 120 + C(psi).
    """
    terms = DigammaTermList(psi_terms=(PsiTerm(c=1.0, a=1.0, b=1.0),))
    value = zeta_term_list_closed(terms, 5.0, c_psi).real
    assert value == pytest.approx(-2 * math.log(120) + c_psi, rel=1e-13), f"Got {value}"


@pytest.mark.unit
def test_m_ecusp_is_linear_in_weights(model_orbifold, c_psi):
    """
    Test that doubling every weight C'(gamma) doubles the contribution.
    """
    doubled = model_orbifold.model_copy(
        update={"cusp_elliptic": tuple(
            gamma.model_copy(update={"weight": 2 * gamma.weight}) for gamma in model_orbifold.cusp_elliptic
        )}
    )
    for m in (1, 7, 30):
        single = m_ecusp(tau(m), model_orbifold, c_psi)
        assert m_ecusp(tau(m), doubled, c_psi) == pytest.approx(2 * single, rel=1e-14), f"Not linear at m={m}"


@pytest.mark.unit
def test_m_ecusp_sums_over_classes(model_orbifold, c_psi):
    """
    Test that the contribution of a class list is the sum over its classes.
    """
    second = EllipticClass(p=1, q=3, weight=0.5)
    both = model_orbifold.model_copy(update={"cusp_elliptic": model_orbifold.cusp_elliptic + (second,)})
    alone = model_orbifold.model_copy(update={"cusp_elliptic": (second,)})
    expected = m_ecusp(tau(5), model_orbifold, c_psi) + m_ecusp(tau(5), alone, c_psi)
    assert m_ecusp(tau(5), both, c_psi) == pytest.approx(expected, rel=1e-12), "Sum over classes violated"


@pytest.mark.unit
def test_contributions_require_calibration(model_orbifold):
    """
    Test that a missing C(psi) raises UncalibratedError.
    """
    with pytest.raises(UncalibratedError):
        m_ecusp(tau(2), model_orbifold, None)
    with pytest.raises(UncalibratedError):
        m_script_i(tau(2), model_orbifold, float("nan"))


@pytest.mark.unit
def test_contributions_require_rank_one():
    """
    Test that n = 2 inputs raise CapabilityError for every explicit contribution.
    """
    orb = OrbifoldData(n=2, volume=1.0, kappa=1, base_tau=[2, 1, 1])
    tau_m = tau(1, base=(2, 1, 1))
    for evaluate in (
        lambda: m_i_identity(tau_m, orb),
        lambda: m_script_i(tau_m, orb, 1.0),
        lambda: m_ecusp(tau_m, orb, 1.0),
    ):
        with pytest.raises(CapabilityError):
            evaluate()


@pytest.mark.unit
def test_plancherel_expansion():
    """
    Test that the Plancherel heat trace is sqrt(pi) (t^-3/2 / 2 + k_2^2 t^-1/2).
    """
    sigma = k_heat_ft(tau(2)).terms[0].sigma
    expansion = plancherel_expansion(sigma)
    k2 = sigma.k2
    assert expansion.coefficient(-1.5).real == pytest.approx(math.sqrt(math.pi) / 2), "t^-3/2 coefficient"
    assert expansion.coefficient(-0.5).real == pytest.approx(math.sqrt(math.pi) * k2 ** 2), "t^-1/2 coefficient"


@pytest.mark.unit
@pytest.mark.parametrize("m", [0, 1, 3, 10, 57])
def test_m_i_identity_closed_form(m, model_orbifold):
    """
    Test MI = -2 pi vol (2 m^2 + 6 m + 13/3) along the ray through (1, 1).
    """
    value = m_i_identity(tau(m), model_orbifold)
    assert value == pytest.approx(identity_closed_form(m), rel=1e-12), f"MI({m}) = {value}"


@pytest.mark.unit
def test_m_i_identity_is_linear_in_volume(model_orbifold):
    """
    Test that MI / volume does not depend on the volume.
    """
    larger = model_orbifold.model_copy(update={"volume": 3.5})
    for m in (1, 20):
        assert m_i_identity(tau(m), larger) / 3.5 == pytest.approx(
            m_i_identity(tau(m), model_orbifold), rel=1e-14
        ), f"Volume scaling failed at m={m}"


@pytest.mark.unit
def test_m_i_identity_leading_term_converges(model_orbifold):
    """
    Test that MI / (m dim tau(m)) converges: successive differences at m, 2m, 4m shrink by about 2.
    """
    def ratio(m: int) -> float:
        return m_i_identity(tau(m), model_orbifold) / (m * weyl_dim(tau(m)))

    differences = [abs(ratio(2 * m) - ratio(m)) for m in (25, 50, 100)]
    assert differences[0] / differences[1] >= 1.9, f"Differences do not shrink: {differences}"
    assert differences[1] / differences[2] >= 1.9, f"Differences do not shrink: {differences}"
    assert ratio(400) == pytest.approx(-2 * math.pi, rel=1e-2), "Leading coefficient -2 pi"


@pytest.mark.unit
@pytest.mark.parametrize("m", [1, 4])
def test_m_i_identity_numeric_oracle(m, model_orbifold):
    """
    Test the closed-form identity contribution against numerical regularisation of the Plancherel trace.
    """
    closed = m_i_identity(tau(m), model_orbifold)
    numeric = m_i_identity_numeric(tau(m), model_orbifold)
    assert numeric == pytest.approx(closed, rel=1e-6), f"{numeric} != {closed}"


@pytest.mark.unit
def test_m_script_i_vanishes_without_cusps(model_orbifold):
    """
    Test that kappa = 0 gives no contribution, even without C(psi).
    """
    neat = model_orbifold.model_copy(update={"kappa": 0})
    assert m_script_i(tau(5), neat, None) == 0.0, "Expected 0 for kappa = 0"
    assert m_script_i_numeric(tau(5), neat) == 0.0, "Expected 0 for kappa = 0"


@pytest.mark.unit
def test_m_script_i_is_linear_in_kappa(model_orbifold, c_psi):
    """
    Test that the contribution scales with the number of cusps.
    """
    three = model_orbifold.model_copy(update={"kappa": 3})
    single = m_script_i(tau(6), model_orbifold, c_psi)
    assert m_script_i(tau(6), three, c_psi) == pytest.approx(3 * single, rel=1e-14), "Not linear in kappa"


@pytest.mark.slow
@pytest.mark.unit
@pytest.mark.parametrize("m", [1, 3, 5])
def test_closed_forms_match_numeric_oracle(m, model_orbifold, c_psi):
    """
    Test that the closed-form cusp and identity kernels equal the numerical regularisation
    of their Gaussian kernel integrals.
    """
    closed = m_ecusp(tau(m), model_orbifold, c_psi)
    numeric = m_ecusp_numeric(tau(m), model_orbifold)
    assert abs(closed - numeric) < 1e-4 * max(1.0, abs(closed)), f"MEcusp({m}): {closed} != {numeric}"

    closed = m_script_i(tau(m), model_orbifold, c_psi)
    numeric = m_script_i_numeric(tau(m), model_orbifold)
    assert abs(closed - numeric) < 1e-4 * max(1.0, abs(closed)), f"MsI({m}): {closed} != {numeric}"


@pytest.mark.slow
@pytest.mark.unit
def test_m_ecusp_growth_bound(model_orbifold, c_psi):
    """
    Test |MEcusp| <= C m log m with a constant that does not grow between the windows
    [50, 100] and [100, 200]. On the model orbifold the values actually decay like 1/m,
    with m |MEcusp| close to 2.
    """
    values = dict((m, m_ecusp(tau(m), model_orbifold, c_psi)) for m in range(1, 201))
    ratio = bound_ratio_sup(list(values.items()), GrowthModel.M_LOG_M)
    assert 0.0 < ratio <= 1.1, f"sup |MEcusp| / (m log m) ratio between windows is {ratio}"
    for m in (50, 100, 200):
        assert m * abs(values[m]) == pytest.approx(1.96, rel=0.05), f"m |MEcusp| at m={m}: {m * abs(values[m])}"


@pytest.mark.unit
def test_m_ecusp_model_value(model_orbifold, c_psi):
    """
    Test the cuspidal elliptic contribution of the model orbifold at m = 3.
    """
    value = m_ecusp(tau(3), model_orbifold, c_psi)
    assert value == pytest.approx(-0.443543022122, rel=1e-6), f"MEcusp(3) = {value}"


@pytest.mark.unit
def test_cusp_growth_check_fails_on_vanishing_contribution(monkeypatch, rng):
    """
    Test that the growth check cannot pass when MEcusp is identically zero.
    """
    monkeypatch.setattr(checks, "m_ecusp", lambda tau_m, orb, c_psi: 0.0)
    monkeypatch.setattr(checks, "m_ecusp_numeric", lambda tau_m, orb: 0.0)
    with pytest.raises(DegenerateModelError):
        checks.check_cusp_growth(rng)


@pytest.mark.unit
def test_m_script_i_is_constant_on_model_ray(model_orbifold, c_psi):
    """
    Test that MsI on the model orbifold is -2 gamma kappa for every m, so it is bounded by C m
    with a constant that shrinks between the windows [50, 100] and [100, 200].
    """
    expected = -2.0 * EULER_GAMMA * model_orbifold.kappa
    values = [(m, m_script_i(tau(m), model_orbifold, c_psi)) for m in range(1, 201)]
    for m, value in values:
        assert value == pytest.approx(expected, rel=1e-8), f"MsI({m}) = {value}"
    assert bound_ratio_sup(values, GrowthModel.M) == pytest.approx(0.5, rel=1e-6), "sup |MsI| / m ratio"


@pytest.mark.unit
def test_fit_growth_on_exact_data():
    """
    Test that exact C m log m data is fitted with vanishing residual.
    """
    values = [(m, 2.5 * m * math.log(m)) for m in range(1, 41)]
    fit = fit_growth(values, GrowthModel.M_LOG_M, column="MEcusp")
    assert fit.coefficient == pytest.approx(2.5, rel=1e-12), f"Coefficient {fit.coefficient}"
    assert fit.max_relative_residual < 1e-12, f"Residual {fit.max_relative_residual}"
    assert fit.window == (21, 40), f"Default window is the upper half, got {fit.window}"
    assert fit.column == "MEcusp", "Column label"


@pytest.mark.unit
def test_fit_growth_on_noisy_data(rng):
    """
    Test that 1% multiplicative noise moves the coefficient by less than 3%.
    """
    m = np.arange(1, 101)
    noisy = 4.0 * m * np.log(m) * (1.0 + 0.01 * rng.standard_normal(m.size))
    fit = fit_growth(list(zip(m.tolist(), noisy.tolist())), GrowthModel.M_LOG_M)
    assert abs(fit.coefficient - 4.0) < 0.03 * 4.0, f"Coefficient {fit.coefficient}"


@pytest.mark.unit
def test_fit_growth_residual_decreases_with_window_start():
    """
    Test that for m log m + m data the residual of the m log m fit decreases as the window moves up.
    """
    values = [(m, m * math.log(m) + m) for m in range(1, 201)]
    residuals = [
        fit_growth(values, GrowthModel.M_LOG_M, window=(start, 200)).max_relative_residual
        for start in (20, 40, 80)
    ]
    assert residuals[0] > residuals[1] > residuals[2], f"Residuals not decreasing: {residuals}"


@pytest.mark.unit
def test_fit_growth_m_dim_model():
    """
    Test the m * dim model with explicit dimensions.
    """
    dims = {m: 2 * m + 3 for m in range(1, 31)}
    values = [(m, -7.0 * m * dims[m]) for m in dims]
    fit = fit_growth(values, GrowthModel.M_DIM, dims=dims)
    assert fit.coefficient == pytest.approx(-7.0, rel=1e-12), f"Coefficient {fit.coefficient}"


@pytest.mark.unit
@pytest.mark.parametrize("values, model, kwargs", [
    ([(m, float(m)) for m in range(1, 6)], GrowthModel.M, {}),
    ([(m, float(m)) for m in range(0, 20)], GrowthModel.M, {"window": (0, 10)}),
    ([(m, float(m)) for m in range(1, 20)], GrowthModel.M_DIM, {}),
    ([(m, float(m)) for m in range(1, 20)], GrowthModel.M, {"window": (50, 60)}),
    ([(1, 0.0)] * 12, GrowthModel.M_LOG_M, {"window": (1, 1)}),
    ([(m, float(m)) for m in range(1, 21)], GrowthModel.M, {"window": (1, 3)}),
])
def test_fit_growth_rejects_degenerate_input(values, model, kwargs):
    """
    Test too few points, m < 1, missing dimensions, an empty window, a vanishing regressor and
    a window holding fewer than 10 points.
    """
    with pytest.raises(DegenerateModelError):
        fit_growth(values, model, **kwargs)


@pytest.mark.unit
def test_bound_ratio_sup():
    """
    Test the sup-ratio on data that obeys the bound and on data that outgrows it.
    """
    within = [(m, 3.0 * m * math.log(m) * (1 + 0.5 * math.sin(m))) for m in range(1, 201)]
    outgrowing = [(m, float(m * m)) for m in range(1, 201)]
    assert bound_ratio_sup(within, GrowthModel.M_LOG_M) <= 1.1, "Bounded data must pass"
    assert bound_ratio_sup(outgrowing, GrowthModel.M_LOG_M) > 1.5, "Quadratic data must fail"
    with pytest.raises(DegenerateModelError):
        bound_ratio_sup([(m, 0.0) for m in range(1, 201)], GrowthModel.M_LOG_M)


@pytest.mark.unit
def test_fit_growth_default_window_keeps_ten_points():
    """
    Test that the default window is the upper half, extended downwards to 10 points.
    """
    short = [(m, 2.0 * m) for m in range(1, 13)]
    long = [(m, 2.0 * m) for m in range(1, 41)]
    assert fit_growth(short, GrowthModel.M).window == (3, 12), "12 points keep the last 10"
    assert fit_growth(long, GrowthModel.M).window == (21, 40), "40 points keep the upper half"


@pytest.mark.unit
def test_report_for_neat_orbifold(neat_config):
    """
    Test that kappa = 0 with no elliptic classes gives zero MsI and MEcusp columns and one row per m.
    """
    report = run_report(neat_config)
    assert len(report.rows) == 12, f"Expected 12 rows, got {len(report.rows)}"
    assert all(row.MsI == 0.0 and row.MEcusp == 0.0 for row in report.rows), "Expected zero columns"
    assert report.rows[2].MI == pytest.approx(identity_closed_form(3, volume=2.0), rel=1e-12), "MI at m = 3"
    assert report.c_psi is None, "No calibration is needed"
    assert {fit.column for fit in report.fits} == {"MI", "MsI", "MEcusp"}, "All columns are fitted"


@pytest.mark.unit
def test_report_for_model_orbifold(c_psi):
    """
    Test the model orbifold report: every column is filled and MEcusp matches m_ecusp.
    """
    config = ReportConfig(
        n=1, volume=1.0, kappa=1, base_tau=[1, 1],
        cusp_elliptic=[{"p": 1, "q": 2, "weight": 1.0}], m_min=1, m_max=10,
    )
    report = TorsionReportBuilder(config, c_psi=c_psi, show_progress=False).build()
    assert [row.m for row in report.rows] == list(range(1, 11)), "Rows follow the m-range"
    assert not report.omitted, f"Unexpected omissions: {report.omitted}"
    assert report.rows[4].MEcusp == pytest.approx(m_ecusp(tau(5), config.orbifold, c_psi), rel=1e-14), "MEcusp"
    assert report.rows[4].lambdas == [7, 6], "lambda_{tau(5),k}"
    assert report.c_psi == c_psi, "The supplied C(psi) is reported"


@pytest.mark.unit
def test_report_omits_columns_for_higher_rank():
    """
    Test that n = 2 keeps the rows and omits every contribution column with a reason.
    """
    config = ReportConfig(n=2, volume=1.0, kappa=0, base_tau=[2, 1, 1], m_min=1, m_max=3)
    report = run_report(config)
    assert len(report.rows) == 3, "Rows are still produced"
    assert set(report.omitted) == {"MI", "MsI", "MEcusp"}, f"Omitted: {report.omitted}"
    assert not report.fits, "No fits for omitted columns"
    assert report.rows[0].lambdas == [5, 3, 2], "lambda_{tau(1),k} for tau(1) = (3, 2, 2)"
    assert report.rows[0].MI is None, "Omitted column stays empty"


@pytest.mark.unit
def test_write_report_csv_and_json(neat_config, tmp_path):
    """
    Test the CSV header and the JSON fit block.
    """
    report = run_report(neat_config)
    csv_path, json_path = tmp_path / "report.csv", tmp_path / "report.json"
    write_report(report, csv_path, "csv")
    write_report(report, json_path, "json")

    frame = pd.read_csv(csv_path)
    assert list(frame.columns) == ["m", "dim", "lambda_0", "lambda_1", "MI", "MsI", "MEcusp"], "CSV header"
    assert len(frame) == 12, "One CSV row per m"
    assert frame["MI"].iloc[0] == pytest.approx(identity_closed_form(1, volume=2.0), rel=1e-11), "12 digits"

    payload = json.loads(json_path.read_text())
    assert len(payload["rows"]) == 12, "JSON rows"
    assert {fit["column"] for fit in payload["fits"]} == {"MI", "MsI", "MEcusp"}, "JSON fit block"

    assert report_frame(report).shape == (12, 7), "Frame shape"
    with pytest.raises(ValueError):
        write_report(report, tmp_path / "report.xml", "xml")


@pytest.mark.unit
def test_row_example_matches_model_orbifold(model_orbifold, c_psi):
    """
    Test that the documented TorsionRow example is the model orbifold row at m = 3.
    """
    row, omitted = compute_row(model_orbifold, c_psi, torsion_row_example["m"])
    assert not omitted, f"Unexpected omissions: {omitted}"
    assert (row.dim, row.lambdas) == (torsion_row_example["dim"], torsion_row_example["lambdas"]), "dim and rates"
    for column in ("MI", "MsI", "MEcusp"):
        assert getattr(row, column) == pytest.approx(torsion_row_example[column], rel=1e-6), f"Column {column}"


@pytest.mark.unit
def test_load_report_config(settings):
    """
    Test that the bundled model configuration parses.
    """
    config = load_report_config(settings.PATH_TO_MODEL_CONFIG)
    assert config.n == 1 and config.kappa == 1, "Model orbifold data"
    assert config.m_range == range(1, 201), "Model m-range"
    assert config.cusp_elliptic[0].q == 2, "One elliptic class of order 2"


@pytest.mark.unit
def test_acceptance_checks_are_registered(rng):
    """
    Test the registry of acceptance checks and run the two cheap ones.
    """
    assert len(CHECKS) == 8, f"Expected 8 checks, got {len(CHECKS)}"
    passed, detail = check_representation_arithmetic(rng)
    assert passed, detail
    passed, detail = check_identity_leading_term(rng)
    assert passed, detail
