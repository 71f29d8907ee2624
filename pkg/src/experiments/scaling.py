"""Ajustes de escala de ξ²_min(N): lei de potência e famílias com correção logarítmica."""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import curve_fit
from scipy.special import lambertw

from src.exceptions import ConvergenceError, DomainError
from src.solvers import Model
from src.special_functions import BRANCH_POINT
from src.spectral import loglog_fit
from .records import FitResult

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 4


def _sdm_log_corrected(n: np.ndarray, a: float, b: float) -> np.ndarray:
    """
    ln ξ² para (a/N)·2z²/(2z − 1) com z = ½[1 − W₋₁(−e/(bN))].

    Com a = 1 e b = 8/π é exatamente o ξ²_min de sdm_optimum; requer bN ≥ e².
    """
    argument = np.maximum(-np.e / (b * n), BRANCH_POINT)
    z = (1 - np.real(lambertw(argument, k=-1))) / 2
    return np.log(a) - np.log(n) + np.log(2 * z ** 2 / (2 * z - 1))


def _crf_log_corrected(n: np.ndarray, a: float, b: float) -> np.ndarray:
    """ln ξ² para a[ln(bN)/N]^{1/3}."""
    return np.log(a) + (np.log(np.log(b * n)) - np.log(n)) / 3


# modelo -> (ln ξ²(N; a, b), chute inicial, limite inferior de b·N_min)
LOG_CORRECTED: Dict[Model, Tuple[Callable, Tuple[float, float], float]] = {
    Model.SDM: (_sdm_log_corrected, (1.0, 8 / np.pi), np.e ** 2),
    Model.CRF: (_crf_log_corrected, ((1.5) ** (1 / 3), 2 / np.pi), 1.0),
}


def odd_log_spaced(n_min: int, n_max: int, count: int) -> List[int]:
    """N ímpares aproximadamente log-espaçados em [n_min, n_max], sem repetição."""
    if n_min < 1 or n_max < n_min or count < 1:
        raise DomainError(f"Janela de N inválida: [{n_min}, {n_max}] com {count} pontos")
    values = np.geomspace(n_min, n_max, count)
    odd = {int(2 * np.floor(v / 2) + 1) for v in values}
    return sorted(n for n in odd if n <= n_max)


def _as_arrays(points: Iterable[Sequence[float]]) -> Tuple[np.ndarray, np.ndarray]:
    table = np.asarray([(float(n), float(xi2)) for n, xi2 in points], dtype=float)
    if table.ndim != 2 or table.shape[0] < MIN_FIT_POINTS:
        raise DomainError(f"Ajuste de escala requer ao menos {MIN_FIT_POINTS} pontos")
    order = np.argsort(table[:, 0])
    n, xi2 = table[order, 0], table[order, 1]
    if np.unique(n).size < 2:
        raise DomainError("Ajuste com posto deficiente: todos os N são iguais")
    if np.any(n <= 0) or np.any(xi2 <= 0):
        raise DomainError("N e ξ²_min devem ser positivos")
    return n, xi2


def fit_scaling(
    points: Iterable[Sequence[float]],
    family: str = 'power',
    model: Optional[Model] = None
) -> FitResult:
    """
    Ajusta ξ²_min(N).

    Args:
        points: Pares (N, ξ²_min)
        family: 'power' (a·N^b em log-log) ou 'log-corrected'
        model: Obrigatório para 'log-corrected' (escolhe a forma SDM ou CRF)

    Returns:
        FitResult com coeficientes, norma do resíduo em ln ξ² e janela de N
    """
    n, xi2 = _as_arrays(points)
    window = (int(n.min()), int(n.max()))

    if family == 'power':
        fit = loglog_fit(n, xi2)
        logger.info("Lei de potência em N ∈ %s: expoente %.4f, resíduo %.3e", window, fit.slope, fit.residual)
        return FitResult(
            family='power',
            model=None if model is None else Model(model).value,
            coefficients={'a': fit.prefactor, 'b': fit.slope},
            residual=fit.residual,
            n_window=window,
            n_points=fit.n_points,
        )

    if family != 'log-corrected':
        raise DomainError(f"Família de ajuste desconhecida: {family}")
    if model is None:
        raise DomainError("Família 'log-corrected' requer o modelo (sdm ou crf)")
    model = Model(model)
    function, guess, min_bn = LOG_CORRECTED[model]
    lower_b = min_bn / n.min() * (1 + 1e-9)
    try:
        coefficients, _ = curve_fit(
            function, n, np.log(xi2),
            p0=(guess[0], max(guess[1], 2 * lower_b)),
            bounds=([1e-12, lower_b], [np.inf, np.inf]),
        )
    except (RuntimeError, ValueError) as exc:
        raise ConvergenceError(f"Ajuste com correção logarítmica não convergiu: {exc}") from exc
    residual = float(np.linalg.norm(function(n, *coefficients) - np.log(xi2)))
    logger.info("Correção logarítmica (%s) em N ∈ %s: a=%.4g, b=%.4g, resíduo %.3e",
                model.value, window, coefficients[0], coefficients[1], residual)
    return FitResult(
        family='log-corrected',
        model=model.value,
        coefficients={'a': float(coefficients[0]), 'b': float(coefficients[1])},
        residual=residual,
        n_window=window,
        n_points=int(n.size),
    )
