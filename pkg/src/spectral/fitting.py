"""Ajustes lineares em escala log-log."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from src.exceptions import DomainError


@dataclass(frozen=True)
class LogLogFit:
    """Ajuste ln y = intercept + slope·ln x."""

    slope: float
    intercept: float
    residual: float
    window: Tuple[float, float]
    n_points: int

    @property
    def prefactor(self) -> float:
        return float(np.exp(self.intercept))


def loglog_fit(x: Sequence[float], y: Sequence[float]) -> LogLogFit:
    """
    Mínimos quadrados de ln|y| contra ln x.

    Args:
        x: Abscissas positivas
        y: Ordenadas não nulas

    Returns:
        LogLogFit com a norma do resíduo em ln y
    """
    x = np.asarray(x, dtype=float)
    y = np.abs(np.asarray(y, dtype=float))
    if x.size != y.size or x.size < 2:
        raise DomainError("Ajuste log-log requer ao menos dois pares (x, y)")
    if np.any(x <= 0) or np.any(y <= 0):
        raise DomainError("Ajuste log-log requer valores positivos")
    design = np.column_stack([np.ones_like(x), np.log(x)])
    coefficients, _, rank, _ = np.linalg.lstsq(design, np.log(y), rcond=None)
    if rank < 2:
        raise DomainError("Ajuste log-log com posto deficiente (x constante)")
    residual = float(np.linalg.norm(design @ coefficients - np.log(y)))
    return LogLogFit(float(coefficients[1]), float(coefficients[0]), residual, (float(x.min()), float(x.max())), int(x.size))


def tail_exponent(values: Sequence[float], window: Optional[Tuple[int, int]] = None) -> LogLogFit:
    """
    Expoente da cauda values[k] ~ k^p.

    Args:
        values: Sequência indexada por k = 0, 1, ...
        window: (k_min, k_max) inclusivo; padrão [10, min(50, len/4)]

    Returns:
        LogLogFit com slope = p
    """
    values = np.asarray(values, dtype=float)
    if window is None:
        window = (10, min(50, values.size // 4))
    k_min, k_max = window
    if k_min < 1 or k_max >= values.size or k_max - k_min < 1:
        raise DomainError(f"Janela {window} inválida para {values.size} valores")
    k = np.arange(k_min, k_max + 1)
    return loglog_fit(k, values[k])
