"""combinat - partitions, codegree vectors, nu products and Phi numbers"""
from .codeg_vectors import (
    CodegVector, partitions, codeg, codeg_from, sum_from, enumerate_B, enumerate_C,
)
from .binomials import (
    Decomposition, binomial, multinomial, enumerate_decompositions, nu_product,
    n_series, phi, phi_series, brute_F,
)

# Export public API
__all__ = [
    'CodegVector', 'Decomposition',
    'partitions', 'codeg', 'codeg_from', 'sum_from', 'enumerate_B', 'enumerate_C',
    'binomial', 'multinomial', 'enumerate_decompositions', 'nu_product',
    'n_series', 'phi', 'phi_series', 'brute_F',
]
