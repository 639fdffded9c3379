"""series - truncated power series and the universal polynomials"""
from .truncated_series import TruncatedSeries, series_from_ints
from .universal import (
    SMOOTH_VARIABLES, CP2_VARIABLES, singular_variables,
    base_series, universal_P, universal_Q, universal_P_star, universal_Q_star,
    cp2_specialization, universal_series_numeric, universal_singular_numeric,
    singular_star_numeric, eval_universal, format_poly, poly_to_json,
    variable_names, to_ring,
)

# Export public API
__all__ = [
    'TruncatedSeries', 'series_from_ints',
    'SMOOTH_VARIABLES', 'CP2_VARIABLES', 'singular_variables',
    'base_series', 'universal_P', 'universal_Q', 'universal_P_star', 'universal_Q_star',
    'cp2_specialization', 'universal_series_numeric', 'universal_singular_numeric',
    'singular_star_numeric', 'eval_universal', 'format_poly', 'poly_to_json',
    'variable_names', 'to_ring',
]
