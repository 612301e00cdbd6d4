from torsion.assembly import (
    k_heat_ft,
    m_ecusp,
    m_ecusp_numeric,
    m_i_identity,
    m_i_identity_numeric,
    m_script_i,
    m_script_i_numeric,
    plancherel_expansion
)
from torsion.fitting import fit_growth, bound_ratio_sup
from torsion.report import (
    TorsionReportBuilder,
    run_report,
    report_frame,
    report_json,
    write_report,
    load_report_config
)
