"""
Módulo Analytics - Previsões analíticas com metadados de validade
"""

from .results import AnalyticVariant, AnalyticResult
from .rescaling import eta_from_upsilon, upsilon_from_eta, critical_scale
from .sdm import (
    SdmPredictions,
    sdm_linearized,
    sdm_even,
    sdm_odd,
    sdm_optimum,
    sdm_bulk_sum
)
from .crf import (
    CrfPredictions,
    crf_mean_field,
    crf_above_threshold,
    crf_below_threshold,
    crf_critical,
    crf_optimum,
    crf_bulk_sum,
    crf_classical_moments
)

__all__ = [
    'AnalyticVariant',
    'AnalyticResult',
    'eta_from_upsilon',
    'upsilon_from_eta',
    'critical_scale',
    'SdmPredictions',
    'sdm_linearized',
    'sdm_even',
    'sdm_odd',
    'sdm_optimum',
    'sdm_bulk_sum',
    'CrfPredictions',
    'crf_mean_field',
    'crf_above_threshold',
    'crf_below_threshold',
    'crf_critical',
    'crf_optimum',
    'crf_bulk_sum',
    'crf_classical_moments'
]
