"""
Módulo Experiments - Varreduras, busca do ótimo, ajustes de escala e emissão
"""

from .config import GridSpec, SweepConfig, load_config, parse_config, apply_overrides
from .records import SweepPoint, SweepResult, FitResult, OptimumRecord
from .sweep import ANALYTIC_EVALUATORS, evaluate_point, sweep_tasks, run_sweep
from .optimum import default_bracket, xi2_function, scan_optimum
from .scaling import odd_log_spaced, fit_scaling
from .emit import (
    sweep_to_frame,
    optimum_to_frame,
    fits_to_frame,
    emit,
    emit_optimum,
    emit_fit,
    emit_husimi,
    load_fit_input,
    load_fit_points
)
from .verify import OracleCheck, VerifyReport, run_verify

__all__ = [
    'GridSpec',
    'SweepConfig',
    'load_config',
    'parse_config',
    'apply_overrides',
    'SweepPoint',
    'SweepResult',
    'FitResult',
    'OptimumRecord',
    'ANALYTIC_EVALUATORS',
    'evaluate_point',
    'sweep_tasks',
    'run_sweep',
    'default_bracket',
    'xi2_function',
    'scan_optimum',
    'odd_log_spaced',
    'fit_scaling',
    'sweep_to_frame',
    'optimum_to_frame',
    'fits_to_frame',
    'emit',
    'emit_optimum',
    'emit_fit',
    'emit_husimi',
    'load_fit_input',
    'load_fit_points',
    'OracleCheck',
    'VerifyReport',
    'run_verify'
]
