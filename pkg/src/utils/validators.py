"""
Validadores de parâmetros
Funções para validação de número de partículas, ângulos, grades e matrizes.
"""

import numbers
from typing import Optional, Sequence

import numpy as np

from src.exceptions import DomainError, NonHermitianError


def validate_particle_number(n_particles) -> int:
    """
    Valida o número de partículas N.

    Args:
        n_particles: Número de sistemas de dois níveis

    Returns:
        N como inteiro

    Raises:
        DomainError: Se N não for inteiro positivo
    """
    if isinstance(n_particles, bool):
        raise DomainError(f"N deve ser inteiro, recebido {n_particles!r}")
    if not isinstance(n_particles, numbers.Integral):
        if isinstance(n_particles, numbers.Real) and float(n_particles).is_integer():
            n_particles = int(n_particles)
        else:
            raise DomainError(f"N deve ser inteiro, recebido {n_particles!r}")
    if n_particles < 1:
        raise DomainError(f"N deve ser positivo, recebido {n_particles}")
    return int(n_particles)


def validate_parity(n_particles: int, parity: str) -> None:
    """
    Valida a paridade de N.

    Args:
        n_particles: Número de partículas
        parity: 'even' ou 'odd'
    """
    expected = 0 if parity == 'even' else 1
    if n_particles % 2 != expected:
        nome = 'par' if parity == 'even' else 'ímpar'
        raise DomainError(f"N deve ser {nome}, recebido {n_particles}")


def validate_range(
    value: float,
    name: str,
    low: Optional[float] = None,
    high: Optional[float] = None,
    include_low: bool = True,
    include_high: bool = True
) -> float:
    """
    Valida que um escalar finito está dentro de um intervalo.

    Args:
        value: Valor a ser validado
        name: Nome do parâmetro (para a mensagem de erro)
        low: Limite inferior (None = sem limite)
        high: Limite superior (None = sem limite)
        include_low: Se o limite inferior é fechado
        include_high: Se o limite superior é fechado

    Returns:
        O valor como float
    """
    value = float(value)
    if not np.isfinite(value):
        raise DomainError(f"{name} deve ser finito, recebido {value}")
    if low is not None and (value < low or (value == low and not include_low)):
        raise DomainError(f"{name} fora do intervalo: {value} (mínimo {low})")
    if high is not None and (value > high or (value == high and not include_high)):
        raise DomainError(f"{name} fora do intervalo: {value} (máximo {high})")
    return value


def hermiticity_deviation(matrix: np.ndarray) -> float:
    """Desvio relativo ‖M − M†‖ / max(‖M‖, 1) na norma de Frobenius."""
    scale = max(np.linalg.norm(matrix), 1.0)
    return float(np.linalg.norm(matrix - matrix.conj().T) / scale)


def validate_hermitian(matrix: np.ndarray, tol: float) -> float:
    """
    Valida que uma matriz é hermitiana.

    Args:
        matrix: Matriz quadrada
        tol: Desvio máximo permitido

    Returns:
        Desvio medido
    """
    deviation = hermiticity_deviation(matrix)
    if deviation > tol:
        raise NonHermitianError(
            f"Matriz não hermitiana (desvio {deviation:.3e} > {tol:.1e})",
            deviation
        )
    return deviation


def validate_monotone_grid(values: Sequence[float], name: str = "grade") -> np.ndarray:
    """
    Valida que uma grade é não vazia e estritamente monótona.

    Args:
        values: Pontos da grade
        name: Nome da grade

    Returns:
        Grade como array
    """
    grid = np.asarray(values, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError(f"{name} deve ser uma sequência não vazia")
    if not np.all(np.isfinite(grid)):
        raise DomainError(f"{name} contém valores não finitos")
    if grid.size > 1:
        steps = np.diff(grid)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise DomainError(f"{name} deve ser estritamente monótona")
    return grid
