"""
Módulo Dicke - Base, operadores coletivos, estados coerentes e Husimi
"""

from .basis import DickeBasis
from .operators import (
    CollectiveOperator,
    ladder_elements,
    build_operators,
    expectation,
    expectation_many,
    rotation_about_x,
    rotate_about_x,
    apply_lowering,
    apply_raising,
    spin_moments
)
from .coherent import SpinCoherentState, coherent_state, coherent_moduli
from .husimi import HusimiGrid, husimi, husimi_integral, make_angles

__all__ = [
    'DickeBasis',
    'CollectiveOperator',
    'ladder_elements',
    'build_operators',
    'expectation',
    'expectation_many',
    'rotation_about_x',
    'rotate_about_x',
    'apply_lowering',
    'apply_raising',
    'spin_moments',
    'SpinCoherentState',
    'coherent_state',
    'coherent_moduli',
    'HusimiGrid',
    'husimi',
    'husimi_integral',
    'make_angles'
]
