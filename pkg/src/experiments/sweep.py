"""
Execução de varreduras de parâmetros
Cada ponto (N, parâmetro) é independente e roda num pool de threads; o
resultado é ordenado pelo índice da grade antes da emissão.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

from src.analytics import (
    AnalyticResult,
    crf_above_threshold,
    crf_below_threshold,
    crf_critical,
    crf_mean_field,
    sdm_even,
    sdm_linearized,
    sdm_odd
)
from src.config import current_settings, override_settings
from src.exceptions import DickeError
from src.solvers import Model, ModelParams, observables, steady_state
from .config import SweepConfig
from .records import SweepPoint, SweepResult

logger = logging.getLogger(__name__)

Evaluator = Callable[[ModelParams], Optional[AnalyticResult]]


def _sdm_only_positive(function: Callable[[ModelParams], AnalyticResult]) -> Evaluator:
    def evaluate(params: ModelParams) -> Optional[AnalyticResult]:
        return function(params) if params.zeta > 0 else None
    return evaluate


ANALYTIC_EVALUATORS: Dict[str, Evaluator] = {
    'sdm_linearized': _sdm_only_positive(lambda p: sdm_linearized(p.zeta, p.n_particles)),
    'sdm_even': _sdm_only_positive(
        lambda p: sdm_even(p.n_particles, p.zeta) if p.n_particles % 2 == 0 else None
    ),
    'sdm_odd': _sdm_only_positive(
        lambda p: sdm_odd(p.n_particles, p.zeta) if p.n_particles % 2 == 1 else None
    ),
    'crf_mean_field': lambda p: crf_mean_field(p.n_particles, p.upsilon) if p.upsilon <= 1 else None,
    'crf_below_threshold': lambda p: (
        crf_below_threshold(p.upsilon, p.n_particles) if p.upsilon < 1 else None
    ),
    'crf_above_threshold': lambda p: (
        crf_above_threshold(p.n_particles, p.upsilon, with_moments=False) if p.upsilon > 1 else None
    ),
    'crf_critical': lambda p: crf_critical(p.n_particles, upsilon=p.upsilon) if p.upsilon <= 1 else None,
}


def evaluate_point(
    index: int,
    model: Model,
    n_particles: int,
    value: float,
    grid_value: float,
    analytics: List[str]
) -> SweepPoint:
    """
    Avalia um ponto: estado exato, observáveis e variantes analíticas.

    Args:
        index: Posição na ordem da varredura
        model: SDM ou CRF
        n_particles: Número de spins
        value: Parâmetro de controle já convertido (ζ ou Υ)
        grid_value: Coordenada original da grade (ζ, Υ, η ou 1 − Υ)
        analytics: Nomes das variantes a avaliar

    Returns:
        SweepPoint (erros de domínio e numéricos ficam registrados em error)
    """
    point = SweepPoint(
        index=index,
        n_particles=n_particles,
        parameter_name='zeta' if model is Model.SDM else 'upsilon',
        parameter=value,
        grid_value=grid_value,
    )
    try:
        params = ModelParams.sdm(n_particles, value) if model is Model.SDM else ModelParams.crf(n_particles, value)
    except DickeError as exc:
        logger.warning("Ponto %d fora do domínio (grade %.6g): %s", index, grid_value, exc)
        point.error = f"{type(exc).__name__}: {exc}"
        return point

    contrast = 'z' if model is Model.SDM else 'yz'
    try:
        point.numeric = observables(steady_state(params), contrast)
    except DickeError as exc:
        logger.warning("Falha em %s: %s", params.label(), exc)
        point.error = f"{type(exc).__name__}: {exc}"

    for name in analytics:
        try:
            result = ANALYTIC_EVALUATORS[name](params)
        except DickeError as exc:
            point.flags.append(f"{name}: {exc}")
            continue
        if result is None:
            point.flags.append(f"{name}: não se aplica")
            continue
        point.analytics[name] = result.to_record(n_particles, contrast)
    return point


def sweep_tasks(config: SweepConfig) -> List[Tuple[int, int, float, float]]:
    """Lista determinística (índice, N, parâmetro de controle, coordenada) da varredura."""
    tasks = []
    coordinates = config.grid.coordinates()
    for n in config.particle_numbers():
        for coordinate, value in zip(coordinates, config.grid.control_values(n)):
            tasks.append((len(tasks), n, float(value), float(coordinate)))
    return tasks


def run_sweep(config: SweepConfig) -> SweepResult:
    """
    Executa a varredura descrita pela configuração.

    Args:
        config: Configuração validada

    Returns:
        SweepResult com pontos ordenados pelo índice da grade
    """
    tasks = sweep_tasks(config)
    with override_settings(**config.tolerances):
        workers = config.workers or current_settings().workers
        logger.info("Varredura %s: %d pontos, %d worker(s)", config.model.value, len(tasks), workers)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(evaluate_point, index, config.model, n, value, coordinate, config.analytics)
                for index, n, value, coordinate in tasks
            ]
            points = [future.result() for future in futures]
    points.sort(key=lambda point: point.index)
    failures = sum(1 for point in points if not point.ok)
    if failures:
        logger.warning("%d de %d pontos falharam", failures, len(points))
    return SweepResult(config=config, points=points)
