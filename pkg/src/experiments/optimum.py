"""
Busca numérica do squeezing ótimo
Varredura grossa em grade logarítmica seguida de refinamento por seção
áurea em ln(parâmetro). SDM varre ζ; CRF varre 1 − Υ (lado abaixo do limiar).
"""

import logging
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from src.analytics import crf_optimum, sdm_optimum, upsilon_from_eta
from src.exceptions import DickeError, NoMinimumError
from src.solvers import Model, ModelParams, observables, steady_state
from src.utils.validators import validate_particle_number
from .records import OptimumRecord

logger = logging.getLogger(__name__)

SCAN_PARAMETERS = {Model.SDM: 'zeta', Model.CRF: 'delta_upsilon'}

# janela de |η| usada como intervalo padrão do CRF
CRF_ETA_WINDOW = (0.2, 10.0)


def default_bracket(model: Model, n_particles: int) -> Tuple[float, float]:
    """
    Intervalo padrão de busca.

    SDM: ζN ∈ [0.5, 40]; CRF: |η| ∈ [0.2, 10] convertido para 1 − Υ.
    """
    model = Model(model)
    n = validate_particle_number(n_particles)
    if model is Model.SDM:
        return 0.5 / n, min(1.0, 40.0 / n)
    low, high = (1.0 - upsilon_from_eta(n, -eta) for eta in CRF_ETA_WINDOW)
    return low, min(high, 1.0)


def _params_for(model: Model, n_particles: int, value: float) -> ModelParams:
    if model is Model.SDM:
        return ModelParams.sdm(n_particles, value)
    return ModelParams.crf(n_particles, 1.0 - value)


def xi2_function(model: Model, n_particles: int) -> Callable[[float], float]:
    """ξ² numérico como função do parâmetro de varredura (inf sem contraste)."""
    model = Model(model)
    contrast = 'z' if model is Model.SDM else 'yz'

    def xi2(value: float) -> float:
        record = observables(steady_state(_params_for(model, n_particles, value)), contrast)
        return np.inf if record.xi2 is None else record.xi2

    return xi2


def _analytic_optimum(model: Model, n_particles: int) -> Tuple[Optional[float], Optional[float]]:
    try:
        if model is Model.SDM:
            result = sdm_optimum(n_particles)
            return result['zeta_min'], result['xi2_min']
        result = crf_optimum(n_particles)
        return 1.0 - upsilon_from_eta(n_particles, result['eta_min']), result['xi2_min']
    except DickeError as exc:
        logger.info("Sem previsão analítica do ótimo para N=%d: %s", n_particles, exc)
        return None, None


def scan_optimum(
    model: Model,
    n_particles: int,
    bracket: Optional[Tuple[float, float]] = None,
    grid_points: int = 25,
    xtol: float = 1e-4
) -> OptimumRecord:
    """
    Localiza o mínimo de ξ² no parâmetro de controle.

    Args:
        model: SDM ou CRF
        n_particles: N
        bracket: (mínimo, máximo) do parâmetro; padrão de default_bracket
        grid_points: Pontos da varredura grossa
        xtol: Tolerância relativa no parâmetro

    Returns:
        OptimumRecord com o mínimo numérico e a previsão analítica

    Raises:
        NoMinimumError: Se o menor ξ² da varredura está na borda do intervalo
    """
    model = Model(model)
    n = validate_particle_number(n_particles)
    low, high = bracket if bracket is not None else default_bracket(model, n)
    if not 0 < low < high:
        raise NoMinimumError(f"Intervalo inválido ({low}, {high})")
    if grid_points < 3:
        raise NoMinimumError("Varredura grossa requer ao menos 3 pontos")

    xi2 = xi2_function(model, n)
    grid = np.geomspace(low, high, grid_points)
    coarse = np.array([xi2(value) for value in grid])
    best = int(np.argmin(coarse))
    if not np.isfinite(coarse[best]) or best in (0, grid_points - 1):
        raise NoMinimumError(
            f"{model.value} N={n}: ξ² sem mínimo interior em [{low:.4g}, {high:.4g}]"
        )

    log_grid = np.log(grid)
    center = log_grid[best]
    result = minimize_scalar(
        lambda u: xi2(float(np.exp(u))),
        bracket=(log_grid[best - 1], center, log_grid[best + 1]),
        method='golden',
        options={'xtol': xtol / (2 * max(abs(center), 1.0))},
    )
    param_min = float(np.exp(result.x))
    logger.info("%s N=%d: mínimo em %s=%.6g, ξ²=%.6g (%d avaliações)",
                model.value, n, SCAN_PARAMETERS[model], param_min, result.fun, result.nfev)

    analytic_param, analytic_xi2 = _analytic_optimum(model, n)
    return OptimumRecord(
        model=model.value,
        n_particles=n,
        parameter_name=SCAN_PARAMETERS[model],
        param_min=param_min,
        xi2_min_numeric=float(result.fun),
        param_min_analytic=analytic_param,
        xi2_min_analytic=analytic_xi2,
        evaluations=grid_points + int(result.nfev),
    )
