from .catalog import MAPS, catalog, ore_maps, ore_presentation
from .params import GenericParams, case_dispatch, case_factors, gm_check
from .residuals import nonzero, si_residuals
from .screen import regularity_screen, series_coeffs
from .solutions import SAMPLES, SOLUTIONS, perturbation_report, residual_report, solution_params
from .tables import Tables, coeff_tables

__all__ = [
    "MAPS", "catalog", "ore_maps", "ore_presentation",
    "GenericParams", "case_dispatch", "case_factors", "gm_check",
    "nonzero", "si_residuals", "regularity_screen", "series_coeffs",
    "SAMPLES", "SOLUTIONS", "perturbation_report", "residual_report", "solution_params",
    "Tables", "coeff_tables",
]
