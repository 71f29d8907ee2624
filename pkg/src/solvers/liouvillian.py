"""
Liouvilliano vetorizado e estado estacionário por força bruta
Vetorização por colunas: vec(AXB) = (Bᵀ ⊗ A) vec(X).
"""

import logging

import numpy as np
import scipy.linalg

from src.config import current_settings
from src.exceptions import DegenerateNullSpaceError, DomainError, IllConditionedError
from .density import DensityMatrix
from .params import ModelParams

logger = logging.getLogger(__name__)


def vectorize(matrix: np.ndarray) -> np.ndarray:
    """vec(X) empilhando colunas."""
    return np.asarray(matrix).reshape(-1, order='F')


def unvectorize(vector: np.ndarray, dim: int) -> np.ndarray:
    """Inversa de vectorize."""
    return np.asarray(vector).reshape((dim, dim), order='F')


def left_multiplication(operator: np.ndarray) -> np.ndarray:
    """Superoperador X ↦ A X."""
    return np.kron(np.eye(operator.shape[0]), operator)


def right_multiplication(operator: np.ndarray) -> np.ndarray:
    """Superoperador X ↦ X B."""
    return np.kron(operator.T, np.eye(operator.shape[0]))


def dissipator(jump: np.ndarray) -> np.ndarray:
    """D(L)X = L X L† − ½{L†L, X}."""
    gram = jump.conj().T @ jump
    return (
        np.kron(jump.conj(), jump)
        - 0.5 * left_multiplication(gram)
        - 0.5 * right_multiplication(gram)
    )


def liouvillian(params: ModelParams) -> np.ndarray:
    """
    Matriz do Liouvilliano −i[H, ·] + (1/N)·D(L) da equação mestra do modelo.

    Args:
        params: Modelo e parâmetros

    Returns:
        Matriz (N+1)² × (N+1)²
    """
    hamiltonian, jump = params.master_equation_terms()
    coherent = -1j * (left_multiplication(hamiltonian) - right_multiplication(hamiltonian))
    return coherent + params.rate * dissipator(jump)


def liouvillian_null_state(params: ModelParams) -> DensityMatrix:
    """
    Estado estacionário como vetor nulo do Liouvilliano (oráculo para N pequeno).

    Args:
        params: Modelo e parâmetros (N ≤ liouvillian_max_n)

    Returns:
        DensityMatrix normalizada com construção 'null-space'

    Raises:
        DegenerateNullSpaceError: Se o segundo menor valor singular também for nulo
        IllConditionedError: Se o resíduo exceder a tolerância
    """
    settings = current_settings()
    if params.n_particles > settings.liouvillian_max_n:
        raise DomainError(
            f"Liouvilliano denso limitado a N ≤ {settings.liouvillian_max_n}, recebido {params.n_particles}"
        )
    dim = params.basis.dim
    superoperator = liouvillian(params)
    _, singular_values, right = scipy.linalg.svd(superoperator)
    if singular_values[-2] < settings.null_space_gap * singular_values[0]:
        raise DegenerateNullSpaceError(
            f"Núcleo degenerado para {params.label()}", singular_values=singular_values[-3:]
        )

    matrix = unvectorize(right[-1].conj(), dim)
    matrix = matrix / np.trace(matrix)
    matrix = (matrix + matrix.conj().T) / 2
    residual = float(np.linalg.norm(superoperator @ vectorize(matrix)))
    if residual > settings.liouvillian_residual_tol:
        raise IllConditionedError(f"Resíduo {residual:.3e} do Liouvilliano para {params.label()}")
    logger.debug("%s: núcleo com σ₂/σ₁ = %.2e", params.label(), singular_values[-2] / singular_values[0])
    return DensityMatrix(
        params.basis, matrix, 'null-space',
        metadata={
            'model': params.model.value,
            'parameter_name': params.parameter_name,
            'parameter': params.parameter,
            'residual': residual,
            'singular_gap': float(singular_values[-2] / singular_values[0]),
        },
    )
