"""
Suíte de equivalência com o oráculo do Liouvilliano
Para N pequeno compara, entrada a entrada, o estado em forma fechada com
o vetor nulo do Liouvilliano denso em pontos sorteados com semente fixa.
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from src.exceptions import DickeError
from src.solvers import Model, ModelParams, liouvillian_null_state, steady_state

logger = logging.getLogger(__name__)

DEFAULT_N_VALUES = tuple(range(2, 13))

# faixas de sorteio: |ζ| longe de 0 (núcleo quase degenerado) e Υ dos dois lados do limiar
ZETA_RANGE = (0.1, 1.0)
UPSILON_RANGE = (0.0, 2.0)


class OracleCheck(BaseModel):
    """Comparação de um ponto."""

    model: str
    n_particles: int
    parameter: float
    max_deviation: Optional[float] = None
    passed: bool
    error: Optional[str] = None


class VerifyReport(BaseModel):
    """Resultado da suíte: checagens individuais e resumo por modelo."""

    seed: int
    tolerance: float
    checks: List[OracleCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def summary(self) -> Dict[str, Dict[str, float]]:
        """Por modelo: número de pontos, falhas e maior desvio observado."""
        result: Dict[str, Dict[str, float]] = {}
        for model in sorted({check.model for check in self.checks}):
            checks = [check for check in self.checks if check.model == model]
            deviations = [check.max_deviation for check in checks if check.max_deviation is not None]
            result[model] = {
                'points': len(checks),
                'failures': sum(1 for check in checks if not check.passed),
                'max_deviation': max(deviations) if deviations else float('nan'),
            }
        return result


def sample_parameters(model: Model, count: int, rng: np.random.Generator) -> np.ndarray:
    """Sorteia ζ (com sinal aleatório) ou Υ."""
    if model is Model.SDM:
        magnitude = rng.uniform(*ZETA_RANGE, size=count)
        return magnitude * rng.choice((-1.0, 1.0), size=count)
    return rng.uniform(*UPSILON_RANGE, size=count)


def check_point(params: ModelParams, tolerance: float) -> OracleCheck:
    """Compara forma fechada e oráculo em um ponto."""
    try:
        closed = steady_state(params).matrix
        oracle = liouvillian_null_state(params).matrix
    except DickeError as exc:
        logger.warning("Oráculo falhou em %s: %s", params.label(), exc)
        return OracleCheck(model=params.model.value, n_particles=params.n_particles,
                           parameter=params.parameter, passed=False, error=str(exc))
    deviation = float(np.max(np.abs(closed - oracle)))
    return OracleCheck(model=params.model.value, n_particles=params.n_particles,
                       parameter=params.parameter, max_deviation=deviation,
                       passed=deviation <= tolerance)


def run_verify(
    n_values: Sequence[int] = DEFAULT_N_VALUES,
    points_per_model: int = 20,
    seed: int = 0,
    tolerance: float = 1e-8,
    models: Sequence[Model] = (Model.SDM, Model.CRF)
) -> VerifyReport:
    """
    Executa a suíte de equivalência.

    Args:
        n_values: Valores de N (pequenos: o Liouvilliano é denso)
        points_per_model: Pontos sorteados por modelo e por N
        seed: Semente do gerador
        tolerance: Desvio entrada a entrada aceitável

    Returns:
        VerifyReport
    """
    rng = np.random.default_rng(seed)
    report = VerifyReport(seed=seed, tolerance=tolerance)
    for model in models:
        model = Model(model)
        for n in n_values:
            for value in sample_parameters(model, points_per_model, rng):
                params = ModelParams.sdm(n, float(value)) if model is Model.SDM else ModelParams.crf(n, float(value))
                report.checks.append(check_point(params, tolerance))
    for model, stats in report.summary().items():
        logger.info("%s: %d pontos, %d falhas, desvio máximo %.3e",
                    model, stats['points'], stats['failures'], stats['max_deviation'])
    return report
