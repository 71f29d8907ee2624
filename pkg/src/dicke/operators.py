"""
Operadores coletivos de spin no setor de Dicke
Construção de Ŝx, Ŝy, Ŝz, Ŝ⁻, Ŝ⁺ e cálculo de valores esperados.
"""

import dataclasses
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, Mapping

import numpy as np
import scipy.linalg

from src.exceptions import DimensionMismatchError
from .basis import DickeBasis

if TYPE_CHECKING:
    from src.solvers.density import DensityMatrix


@dataclass(frozen=True, eq=False)
class CollectiveOperator:
    """Operador denso dim×dim sobre uma base de Dicke."""

    basis: DickeBasis
    matrix: np.ndarray
    name: str = ''

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        if matrix.shape != (self.basis.dim, self.basis.dim):
            raise DimensionMismatchError(
                f"Operador {self.name or '?'} com forma {matrix.shape}, "
                f"esperado ({self.basis.dim}, {self.basis.dim})"
            )
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    def dagger(self) -> 'CollectiveOperator':
        """Conjugado hermitiano."""
        return CollectiveOperator(self.basis, self.matrix.conj().T, f"{self.name}†")

    def __matmul__(self, other: 'CollectiveOperator') -> 'CollectiveOperator':
        _check_same_basis(self.basis, other.basis)
        return CollectiveOperator(self.basis, self.matrix @ other.matrix, f"{self.name}{other.name}")

    def __add__(self, other: 'CollectiveOperator') -> 'CollectiveOperator':
        _check_same_basis(self.basis, other.basis)
        return CollectiveOperator(self.basis, self.matrix + other.matrix, f"{self.name}+{other.name}")

    def __sub__(self, other: 'CollectiveOperator') -> 'CollectiveOperator':
        _check_same_basis(self.basis, other.basis)
        return CollectiveOperator(self.basis, self.matrix - other.matrix, f"{self.name}-{other.name}")

    def scaled(self, factor: complex) -> 'CollectiveOperator':
        """Operador multiplicado por um escalar."""
        return CollectiveOperator(self.basis, factor * self.matrix, self.name)

    def squared(self) -> 'CollectiveOperator':
        """Quadrado do operador."""
        return CollectiveOperator(self.basis, self.matrix @ self.matrix, f"{self.name}²")


def _check_same_basis(left: DickeBasis, right: DickeBasis) -> None:
    if left.dim != right.dim:
        raise DimensionMismatchError(f"Dimensões incompatíveis: {left.dim} e {right.dim}")


def ladder_elements(basis: DickeBasis) -> np.ndarray:
    """
    Elementos de matriz de Ŝ⁻ entre vizinhos.

    Args:
        basis: Base de Dicke

    Returns:
        Array L de tamanho dim com L[j] = ⟨j−1|Ŝ⁻|j⟩ = √(S(S+1) − m_j(m_j − 1)) e L[0] = 0
    """
    s = basis.spin
    m = basis.m_values
    elements = np.sqrt(np.clip(s * (s + 1) - m * (m - 1), 0.0, None))
    elements[0] = 0.0
    return elements


@lru_cache(maxsize=16)
def build_operators(basis: DickeBasis) -> Dict[str, CollectiveOperator]:
    """
    Constrói os operadores coletivos de spin.

    Args:
        basis: Base de Dicke (ordem crescente de m)

    Returns:
        Dicionário com as chaves Sx, Sy, Sz, Sminus, Splus
    """
    lowering = np.diag(ladder_elements(basis)[1:], k=1).astype(complex)
    raising = lowering.conj().T
    return {
        'Sx': CollectiveOperator(basis, (raising + lowering) / 2, 'Sx'),
        'Sy': CollectiveOperator(basis, (raising - lowering) / 2j, 'Sy'),
        'Sz': CollectiveOperator(basis, np.diag(basis.m_values), 'Sz'),
        'Sminus': CollectiveOperator(basis, lowering, 'Sminus'),
        'Splus': CollectiveOperator(basis, raising, 'Splus'),
    }


def _state_matrix(rho) -> np.ndarray:
    return np.asarray(getattr(rho, 'matrix', rho))


def expectation(op: CollectiveOperator, rho: 'DensityMatrix') -> complex:
    """
    Valor esperado Tr(ρ·op).

    Args:
        op: Operador coletivo
        rho: Estado (DensityMatrix ou matriz)

    Returns:
        Valor esperado complexo
    """
    matrix = _state_matrix(rho)
    if matrix.shape != op.matrix.shape:
        raise DimensionMismatchError(
            f"Estado {matrix.shape} incompatível com operador {op.matrix.shape}"
        )
    # Tr(ρA) = Σ_ij ρ_ij A_ji
    return complex(np.einsum('ij,ji->', matrix, op.matrix))


def expectation_many(rho: 'DensityMatrix', ops: Mapping[str, CollectiveOperator]) -> Dict[str, complex]:
    """Valores esperados de vários operadores sobre o mesmo estado."""
    return {name: expectation(op, rho) for name, op in ops.items()}


def rotation_about_x(basis: DickeBasis, angle: float) -> np.ndarray:
    """Unitário exp(i·angle·Ŝx) pela decomposição espectral de Ŝx."""
    values, vectors = scipy.linalg.eigh(build_operators(basis)['Sx'].matrix)
    return (vectors * np.exp(1j * angle * values)) @ vectors.conj().T


def rotate_about_x(rho: 'DensityMatrix', angle: float) -> 'DensityMatrix':
    """
    Rotaciona o estado em torno do eixo x.

    Args:
        rho: Estado de partida
        angle: Ângulo de rotação (rad)

    Returns:
        exp(i·angle·Ŝx) ρ exp(−i·angle·Ŝx), com a mesma normalização
    """
    unitary = rotation_about_x(rho.basis, angle)
    rotated = unitary @ rho.matrix @ unitary.conj().T
    rotated = (rotated + rotated.conj().T) / 2
    generator = rho.generator
    if generator is not None:
        # ρ ∝ (A†A)⁻¹ → UρU† ∝ ((AU†)†(AU†))⁻¹
        generator = generator @ unitary.conj().T
    metadata = dict(rho.metadata)
    metadata['rotation_x'] = metadata.get('rotation_x', 0.0) + angle
    return dataclasses.replace(rho, matrix=rotated, generator=generator, metadata=metadata)


def apply_lowering(basis: DickeBasis, vectors: np.ndarray) -> np.ndarray:
    """Aplica Ŝ⁻ a um vetor (ou às colunas de uma matriz) sem formar o operador denso."""
    elements = ladder_elements(basis)[1:]
    if vectors.ndim == 2:
        elements = elements[:, None]
    out = np.zeros_like(vectors, dtype=complex)
    out[:-1] = elements * vectors[1:]
    return out


def apply_raising(basis: DickeBasis, vectors: np.ndarray) -> np.ndarray:
    """Aplica Ŝ⁺ a um vetor (ou às colunas de uma matriz)."""
    elements = ladder_elements(basis)[1:]
    if vectors.ndim == 2:
        elements = elements[:, None]
    out = np.zeros_like(vectors, dtype=complex)
    out[1:] = elements * vectors[:-1]
    return out


def spin_moments(basis: DickeBasis, matrix: np.ndarray) -> Dict[str, float]:
    """
    Momentos ⟨Ŝx⟩, ⟨Ŝy⟩, ⟨Ŝz⟩, ⟨Ŝx²⟩ pela estrutura tridiagonal dos operadores.

    Args:
        basis: Base de Dicke
        matrix: Matriz densidade normalizada

    Returns:
        Dicionário com Sx, Sy, Sz, Sx2 (partes reais)
    """
    if matrix.shape != (basis.dim, basis.dim):
        raise DimensionMismatchError(
            f"Estado {matrix.shape} incompatível com a base de dimensão {basis.dim}"
        )
    elements = ladder_elements(basis)
    diagonal = np.real(np.diagonal(matrix))
    # ⟨Ŝ⁻⟩ = Σ_j ρ[j, j−1]·L[j]
    lowering = np.sum(np.diagonal(matrix, offset=-1) * elements[1:])
    # ⟨Ŝ⁻²⟩ = Σ_j ρ[j, j−2]·L[j−1]·L[j]
    lowering2 = np.sum(np.diagonal(matrix, offset=-2) * elements[1:-1] * elements[2:])
    upper = np.append(elements[1:], 0.0)
    number = np.sum(diagonal * (elements ** 2 + upper ** 2))
    return {
        'Sx': float(np.real(lowering)),
        'Sy': float(-np.imag(lowering)),
        'Sz': float(np.sum(diagonal * basis.m_values)),
        'Sx2': float((2 * np.real(lowering2) + number) / 4),
    }
