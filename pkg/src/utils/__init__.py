"""
Módulo Utils - Validadores e Formatadores
"""

from .validators import (
    validate_particle_number,
    validate_parity,
    validate_range,
    validate_hermitian,
    validate_monotone_grid,
    hermiticity_deviation
)
from .formatters import FLOAT_FORMAT, format_float, format_percent, format_table

__all__ = [
    'validate_particle_number',
    'validate_parity',
    'validate_range',
    'validate_hermitian',
    'validate_monotone_grid',
    'hermiticity_deviation',
    'FLOAT_FORMAT',
    'format_float',
    'format_percent',
    'format_table'
]
