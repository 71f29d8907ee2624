"""
Distribuição de Husimi na esfera de Bloch
Q(θ, φ) = ⟨θ,φ|ρ|θ,φ⟩/(4π) amostrada numa grade regular.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Tuple, Union

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid

from src.config import current_settings
from src.exceptions import DimensionMismatchError, DomainError
from src.utils.formatters import FLOAT_FORMAT
from src.utils.validators import validate_hermitian
from .basis import DickeBasis
from .coherent import coherent_moduli

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HusimiGrid:
    """Valores de Q numa grade θ × φ (linhas em θ)."""

    n_particles: int
    thetas: np.ndarray
    phis: np.ndarray
    values: np.ndarray

    @property
    def peak(self) -> Tuple[float, float, float]:
        """(θ, φ, Q) do máximo da grade."""
        i, j = np.unravel_index(int(np.argmax(self.values)), self.values.shape)
        return float(self.thetas[i]), float(self.phis[j]), float(self.values[i, j])

    @property
    def max_over_median(self) -> float:
        """Razão máximo/mediana: valores baixos indicam distribuição difusa."""
        median = float(np.median(self.values))
        if median <= 0:
            return float('inf')
        return float(np.max(self.values) / median)

    def integral(self) -> float:
        """∫Q sinθ dθ dφ por trapézios (φ periódico)."""
        return husimi_integral(self)

    def diagnostics(self) -> Dict[str, float]:
        """Resumo para o arquivo JSON que acompanha a grade."""
        theta, phi, value = self.peak
        return {
            'n_particles': self.n_particles,
            'n_theta': int(self.thetas.size),
            'n_phi': int(self.phis.size),
            'peak_theta': theta,
            'peak_phi': phi,
            'peak_value': value,
            'max_over_median': self.max_over_median,
            'integral': self.integral(),
        }

    def to_frame(self) -> pd.DataFrame:
        """Tabela com colunas theta, phi, Q (linhas em θ)."""
        theta_grid, phi_grid = np.meshgrid(self.thetas, self.phis, indexing='ij')
        return pd.DataFrame({
            'theta': theta_grid.ravel(),
            'phi': phi_grid.ravel(),
            'Q': self.values.ravel(),
        })

    def to_csv(self, path: Union[str, Path]) -> Path:
        """Escreve a grade em CSV e os diagnósticos em JSON ao lado."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT)
        sidecar = path.with_suffix('.json')
        sidecar.write_text(json.dumps(self.diagnostics(), indent=2, sort_keys=True))
        return path


def make_angles(n_theta: int = 200, n_phi: int = 400) -> Tuple[np.ndarray, np.ndarray]:
    """Grade θ ∈ [0, π] (com extremos) e φ ∈ [0, 2π) (sem o ponto final)."""
    if n_theta < 2 or n_phi < 1:
        raise DomainError(f"Grade de Husimi inválida: {n_theta} × {n_phi}")
    return np.linspace(0.0, np.pi, n_theta), np.linspace(0.0, 2 * np.pi, n_phi, endpoint=False)


def husimi(rho, n_theta: int = 200, n_phi: int = 400) -> HusimiGrid:
    """
    Calcula a distribuição de Husimi de um estado.

    Para cada θ acumula as somas diagonais g_d = Σ_{j−l=d} a_j a_l ρ_jl e
    avalia Q(φ) = Re Σ_d g_d e^{idφ}/(4π).

    Args:
        rho: DensityMatrix (ou matriz) normalizada
        n_theta: Pontos em θ
        n_phi: Pontos em φ

    Returns:
        HusimiGrid
    """
    matrix = np.asarray(getattr(rho, 'matrix', rho), dtype=complex)
    dim = matrix.shape[0]
    if matrix.shape != (dim, dim):
        raise DimensionMismatchError(f"Matriz densidade não quadrada: {matrix.shape}")
    validate_hermitian(matrix, current_settings().hermiticity_tol)

    basis = DickeBasis(dim - 1)
    thetas, phis = make_angles(n_theta, n_phi)
    moduli = coherent_moduli(basis, thetas)

    offsets = np.arange(-(dim - 1), dim)
    sums = np.empty((thetas.size, offsets.size), dtype=complex)
    for column, d in enumerate(offsets):
        rows = np.arange(max(d, 0), dim + min(d, 0))
        cols = rows - d
        sums[:, column] = (moduli[:, rows] * moduli[:, cols]) @ matrix[rows, cols]

    phases = np.exp(1j * np.outer(offsets, phis))
    values = np.real(sums @ phases) / (4 * np.pi)
    negative = values.min()
    if negative < -1e-12:
        logger.warning("Husimi com valor negativo %.3e (estado não positivo?)", negative)
    values = np.clip(values, 0.0, None)
    values.setflags(write=False)
    return HusimiGrid(basis.n_particles, thetas, phis, values)


def husimi_integral(grid: HusimiGrid) -> float:
    """
    Integral de Q sobre a esfera.

    Args:
        grid: Grade de Husimi

    Returns:
        ∫Q dΩ (igual a 1/(N+1) para estado de traço 1)
    """
    weighted = grid.values * np.sin(grid.thetas)[:, None]
    over_theta = trapezoid(weighted, grid.thetas, axis=0)
    return float(np.sum(over_theta) * 2 * np.pi / grid.phis.size)
