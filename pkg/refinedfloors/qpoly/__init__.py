"""qpoly - exact Laurent polynomials in q^(1/2) and polynomials in t"""
from .sym_laurent import SymLaurent
from .tpoly import TPoly
from .quantum import (
    quantum_integer, qint_sq, qint_q2, pair_factor, codeg_coeff, tilde,
    from_tpoly, StarKind, star_factor, t_factor,
)

# Export public API
__all__ = [
    'SymLaurent', 'TPoly', 'StarKind',
    'quantum_integer', 'qint_sq', 'qint_q2', 'pair_factor', 'codeg_coeff',
    'tilde', 'from_tpoly', 'star_factor', 't_factor',
]
