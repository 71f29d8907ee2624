"""
Módulo Solvers - Estados estacionários exatos e oráculo do Liouvilliano
"""

from .params import Model, ModelParams
from .density import DensityMatrix
from .closed_form import (
    sdm_dark_state_even,
    sdm_steady_state_odd,
    crf_steady_state,
    steady_state,
    bidiagonal_inverse_scaled,
    stationarity_residual
)
from .liouvillian import (
    vectorize,
    unvectorize,
    dissipator,
    liouvillian,
    liouvillian_null_state
)
from .observables import ObservableRecord, observables, squeezing_parameter

__all__ = [
    'Model',
    'ModelParams',
    'DensityMatrix',
    'sdm_dark_state_even',
    'sdm_steady_state_odd',
    'crf_steady_state',
    'steady_state',
    'bidiagonal_inverse_scaled',
    'stationarity_residual',
    'vectorize',
    'unvectorize',
    'dissipator',
    'liouvillian',
    'liouvillian_null_state',
    'ObservableRecord',
    'observables',
    'squeezing_parameter'
]
