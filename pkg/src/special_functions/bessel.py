"""Funções de Bessel modificadas I₀ e I₁ (formas com e sem escala)."""

from typing import Union

import numpy as np
from scipy.special import i0, i0e, i1, i1e

from src.exceptions import DomainError

ArrayLike = Union[float, np.ndarray]

MAX_ARGUMENT = 1e8

_SCALED = {0: i0e, 1: i1e}
_PLAIN = {0: i0, 1: i1}


def _validate(order: int, x: ArrayLike) -> np.ndarray:
    if order not in (0, 1):
        raise DomainError(f"Ordem de Bessel não suportada: {order}")
    values = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(values)) or np.any(values < 0):
        raise DomainError(f"Argumento de Bessel deve ser finito e não negativo: {x}")
    if np.any(values > MAX_ARGUMENT):
        raise DomainError(f"Argumento de Bessel acima de {MAX_ARGUMENT:.0e}: {x}")
    return values


def _as_output(values: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(values) if np.ndim(like) == 0 else values


def bessel_I(order: int, x: ArrayLike, scaled: bool = False) -> ArrayLike:
    """
    Função de Bessel modificada de primeira espécie.

    Args:
        order: 0 ou 1
        x: Argumento (x ≥ 0)
        scaled: Se True retorna e^{−x}·I_k(x), que nunca estoura

    Returns:
        I_k(x) ou e^{−x}·I_k(x)
    """
    values = _validate(order, x)
    table = _SCALED if scaled else _PLAIN
    with np.errstate(over='ignore'):
        result = table[order](values)
    return _as_output(result, x)


def bessel_ratio(x: ArrayLike) -> ArrayLike:
    """I₁(x)/I₀(x) pelas formas com escala; vale 0 em x = 0 e cresce para 1."""
    values = _validate(0, x)
    return _as_output(i1e(values) / i0e(values), x)


def log_bessel_I(order: int, x: ArrayLike) -> ArrayLike:
    """
    Logaritmo de I_k(x) sem overflow.

    Args:
        order: 0 ou 1
        x: Argumento (x ≥ 0)

    Returns:
        ln I_k(x) = ln(e^{−x} I_k(x)) + x  (−∞ para I₁(0))
    """
    values = _validate(order, x)
    with np.errstate(divide='ignore'):
        result = np.log(_SCALED[order](values)) + values
    return _as_output(result, x)
