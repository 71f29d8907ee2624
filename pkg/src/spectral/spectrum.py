"""
Decomposição espectral do estado estacionário
Autovalor dominante mais o "bulk" dos demais autoestados.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, NamedTuple, Union

import numpy as np
import pandas as pd
import scipy.linalg
from scipy.special import logsumexp

from src.dicke import DickeBasis, CollectiveOperator
from src.dicke.operators import apply_lowering, apply_raising
from src.exceptions import ConvergenceError
from src.solvers.density import DensityMatrix
from src.utils.formatters import FLOAT_FORMAT

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SteadyStateSpectrum:
    """
    Autovalores λ_k (ordem decrescente) e autovetores do estado.

    Attributes:
        basis: Base de Dicke
        log_raw: ln dos autovalores brutos de (A†A)⁻¹ (−inf para zeros)
        weights: Autovalores normalizados, Σ = 1
        eigenvectors: Colunas |λ_k⟩
        source: 'resolvent' (via A†A) ou 'density' (via ρ)
    """

    basis: DickeBasis
    log_raw: np.ndarray
    weights: np.ndarray
    eigenvectors: np.ndarray
    source: str

    @property
    def raw(self) -> np.ndarray:
        with np.errstate(over='ignore'):
            return np.exp(self.log_raw)

    @property
    def log_lambda0(self) -> float:
        return float(self.log_raw[0])

    @property
    def dominant_weight(self) -> float:
        """λ₀/Σλ_k."""
        return float(self.weights[0])

    def diagonal(self, op: CollectiveOperator) -> np.ndarray:
        """⟨λ_k|op|λ_k⟩ para todo k."""
        vectors = self.eigenvectors
        return np.real(np.sum(vectors.conj() * (op.matrix @ vectors), axis=0))

    def diagonal_moments(self) -> Dict[str, np.ndarray]:
        """⟨Ŝx²⟩_k, ⟨Ŝy⟩_k, ⟨Ŝz⟩_k sem formar operadores densos."""
        vectors = self.eigenvectors
        lowered = apply_lowering(self.basis, vectors)
        raised = apply_raising(self.basis, vectors)
        sx = (lowered + raised) / 2
        sy_expect = np.real(np.sum(vectors.conj() * (raised - lowered) / 2j, axis=0))
        return {
            'sx2': np.sum(np.abs(sx) ** 2, axis=0),
            'sy': sy_expect,
            'sz': np.abs(vectors) ** 2 @ self.basis.m_values,
        }

    def reconstruct(self) -> np.ndarray:
        """Σ_k w_k |λ_k⟩⟨λ_k|."""
        return (self.eigenvectors * self.weights) @ self.eigenvectors.conj().T

    def to_frame(self) -> pd.DataFrame:
        """Tabela k, lambda_k_raw, lambda_k_norm, log_lambda_k_raw, sx2, sy, sz."""
        moments = self.diagonal_moments()
        return pd.DataFrame({
            'k': np.arange(self.weights.size),
            'lambda_k_raw': self.raw,
            'lambda_k_norm': self.weights,
            'log_lambda_k_raw': self.log_raw,
            'sx2': moments['sx2'],
            'sy': moments['sy'],
            'sz': moments['sz'],
        })

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT)
        return path


def _eigh(matrix: np.ndarray):
    try:
        return scipy.linalg.eigh(matrix)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Diagonalização não convergiu (dim {matrix.shape[0]}): {exc}") from exc


def spectrum(rho: DensityMatrix) -> SteadyStateSpectrum:
    """
    Decomposição espectral completa.

    Quando o estado conhece seu gerador A (ρ ∝ (A†A)⁻¹), os autovetores e os
    autovalores do bulk vêm de A†A, λ_k = 1/w_k, que é bem condicionada; λ₀
    vem do maior autovalor de ρ somado a ln do traço bruto.

    Args:
        rho: Estado hermitiano

    Returns:
        SteadyStateSpectrum em ordem decrescente de λ
    """
    if rho.generator is not None and rho.log_raw_trace is not None:
        return _resolvent_spectrum(rho)
    values, vectors = _eigh(rho.matrix)
    values, vectors = values[::-1], vectors[:, ::-1]
    if values[-1] < -1e-10:
        logger.warning("Autovalor negativo %.3e no espectro", values[-1])
    clipped = np.clip(values, 0.0, None)
    offset = rho.log_raw_trace if rho.log_raw_trace is not None and np.isfinite(rho.log_raw_trace) else 0.0
    with np.errstate(divide='ignore'):
        log_raw = np.log(clipped) + offset
    return SteadyStateSpectrum(rho.basis, log_raw, clipped / clipped.sum(), vectors, 'density')


def _resolvent_spectrum(rho: DensityMatrix) -> SteadyStateSpectrum:
    gram = rho.generator.conj().T @ rho.generator
    values, vectors = _eigh(gram)
    with np.errstate(divide='ignore'):
        log_raw = -np.log(np.clip(values, 0.0, None))
    if np.isfinite(rho.log_raw_trace):
        top = scipy.linalg.eigh(rho.matrix, eigvals_only=True, subset_by_index=[rho.basis.dim - 1] * 2)[0]
        log_raw[0] = np.log(top) + rho.log_raw_trace
    else:
        log_raw[0] = np.inf

    if np.isinf(log_raw[0]):
        weights = np.zeros_like(values)
        weights[0] = 1.0
    else:
        weights = np.exp(log_raw - logsumexp(log_raw))
    return SteadyStateSpectrum(rho.basis, log_raw, weights, vectors, 'resolvent')


def bulk_sum(spec: SteadyStateSpectrum, op: CollectiveOperator) -> float:
    """
    Contribuição do bulk Σ_{k≥1} λ_k⟨λ_k|op|λ_k⟩ com λ_k brutos.

    Args:
        spec: Espectro do estado
        op: Operador

    Returns:
        Soma sobre todos os autoestados exceto o dominante
    """
    return float(np.sum(spec.raw[1:] * spec.diagonal(op)[1:]))


def bulk_sum_sx2(spec: SteadyStateSpectrum) -> float:
    """Bulk de Ŝx² sem operadores densos."""
    return float(np.sum(spec.raw[1:] * spec.diagonal_moments()['sx2'][1:]))


class DominantDecomposition(NamedTuple):
    """⟨op⟩ = termo dominante + bulk (normalizados pelo traço bruto)."""

    dominant: float
    bulk: float
    total: float


def dominant_decomposition(spec: SteadyStateSpectrum, values: np.ndarray) -> DominantDecomposition:
    """
    Separa ⟨op⟩ = w₀⟨λ₀|op|λ₀⟩ + Σ_{k≥1} w_k⟨λ_k|op|λ_k⟩.

    Args:
        spec: Espectro
        values: Expectativas diagonais ⟨λ_k|op|λ_k⟩ (ex: spec.diagonal(op))

    Returns:
        DominantDecomposition
    """
    dominant = float(spec.weights[0] * values[0])
    bulk = float(np.sum(spec.weights[1:] * values[1:]))
    return DominantDecomposition(dominant, bulk, dominant + bulk)
