"""Exact existence tests for extremal Sasaki / weighted extremal Kaehler
metrics on admissible projective line bundles."""
__version__ = "0.1.0"

from .admissible import (AdmissibleData, BaseFactor, ValidationReport,
                         WeightParams, curvature_sum, fiber_polynomial,
                         validate)
from .futaki import (AffineFn, CscRay, CscSearch, FutakiValue, SasakiWeight,
                     Sign, c_K, csc_type, df_indicator, double_root_defect,
                     extremal_affine_ibp, find_csc, futaki, pairing,
                     sasaki_weight_pair)
from .solver import (ExistenceReport, ExtremalSolution, Mode, WeightedSolution,
                     existence_verdict, perturbation_pair,
                     scalar_curvature_profile, solve_extremal, solve_weighted,
                     theta_profile)

__all__ = [
    "AdmissibleData", "BaseFactor", "WeightParams", "ValidationReport",
    "validate", "fiber_polynomial", "curvature_sum", "ExtremalSolution",
    "WeightedSolution", "ExistenceReport", "Mode", "solve_extremal",
    "solve_weighted", "theta_profile", "existence_verdict",
    "scalar_curvature_profile", "perturbation_pair", "AffineFn",
    "SasakiWeight", "FutakiValue", "Sign", "CscRay", "CscSearch", "pairing",
    "extremal_affine_ibp", "c_K", "futaki", "csc_type", "df_indicator",
    "find_csc", "double_root_defect", "sasaki_weight_pair",
]
