"""Ramo W₋₁ da função W de Lambert."""

import logging

import numpy as np
from scipy.special import lambertw

from src.exceptions import DomainError

logger = logging.getLogger(__name__)

BRANCH_POINT = -np.exp(-1.0)
BRANCH_POINT_TOL = 1e-9
HALLEY_STEPS = 3


def _halley_step(w: float, x: float) -> float:
    ew = np.exp(w)
    f = w * ew - x
    wp1 = w + 1.0
    return w - f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))


def lambert_w_minus1(x: float) -> float:
    """
    Ramo inferior real W₋₁(x), com w·e^w = x e w ≤ −1.

    A semente vem de scipy.special.lambertw (k = −1) e é polida por até três
    passos de Halley.

    Args:
        x: Argumento em [−1/e, 0)

    Returns:
        W₋₁(x)

    Raises:
        DomainError: Se x estiver fora de [−1/e, 0)
    """
    x = float(x)
    if abs(x - BRANCH_POINT) <= BRANCH_POINT_TOL:
        return -1.0
    if not BRANCH_POINT < x < 0.0:
        raise DomainError(f"W₋₁ definido apenas em (−1/e, 0), recebido {x}")

    w = float(np.real(lambertw(x, k=-1)))
    for _ in range(HALLEY_STEPS):
        if abs(w + 1.0) < 1e-6 or abs(w * np.exp(w) - x) <= 1e-15 * abs(x):
            break
        w = _halley_step(w, x)
    return min(w, -1.0)


def lambert_w_minus1_asymptotic(x: float) -> float:
    """Expansão ln(−x) − ln(−ln(−x)) de W₋₁ para x → 0⁻."""
    x = float(x)
    if not BRANCH_POINT < x < 0.0:
        raise DomainError(f"W₋₁ definido apenas em (−1/e, 0), recebido {x}")
    log_x = np.log(-x)
    if -log_x < np.e:
        logger.warning("Expansão assintótica de W₋₁ fora do regime (x = %.3e)", x)
    return float(log_x - np.log(-log_x))
