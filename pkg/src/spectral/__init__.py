"""
Módulo Spectral - Espectro do estado estacionário e oscilador crítico
"""

from .fitting import LogLogFit, loglog_fit, tail_exponent
from .spectrum import (
    SteadyStateSpectrum,
    DominantDecomposition,
    spectrum,
    bulk_sum,
    bulk_sum_sx2,
    dominant_decomposition
)
from .oscillator import (
    OscillatorGrid,
    OscillatorProblem,
    OscillatorSolution,
    build_problem,
    y_operator,
    solve_oscillator
)

__all__ = [
    'LogLogFit',
    'loglog_fit',
    'tail_exponent',
    'SteadyStateSpectrum',
    'DominantDecomposition',
    'spectrum',
    'bulk_sum',
    'bulk_sum_sx2',
    'dominant_decomposition',
    'OscillatorGrid',
    'OscillatorProblem',
    'OscillatorSolution',
    'build_problem',
    'y_operator',
    'solve_oscillator'
]
