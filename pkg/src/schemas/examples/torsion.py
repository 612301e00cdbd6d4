g_highest_weight_example = {
    "n": 1,
    "coeffs": [1, 1]
}

m_highest_weight_example = {
    "n": 1,
    "coeffs": [4]
}

elliptic_class_example = {
    "p": 1,
    "q": 2,
    "weight": 1.0
}

orbifold_data_example = {
    "n": 1,
    "volume": 1.0,
    "kappa": 1,
    "base_tau": [1, 1],
    "cusp_elliptic": [elliptic_class_example]
}

report_config_example = {
    **orbifold_data_example,
    "m_min": 1,
    "m_max": 20
}

heat_term_set_example = {
    "terms": [
        {"k": 0, "sign": -1, "lam": 5, "rate": 25, "sigma": {"n": 1, "coeffs": [4]}},
        {"k": 1, "sign": 1, "lam": 4, "rate": 16, "sigma": {"n": 1, "coeffs": [5]}}
    ]
}

torsion_row_example = {
    "m": 3,
    "dim": 9,
    "lambdas": [5, 4],
    "MI": -253.421808173,
    "MsI": -1.15443132980,
    "MEcusp": -0.443543022122
}
