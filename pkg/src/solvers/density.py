"""
Matriz densidade com metadados de construção
Normalização, pureza, positividade e exportação em CSV/JSON.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd
import scipy.linalg

from src.config import current_settings
from src.dicke import DickeBasis
from src.exceptions import DimensionMismatchError, DomainError
from src.utils.formatters import FLOAT_FORMAT
from src.utils.validators import validate_hermitian

CONSTRUCTIONS = ('closed-form', 'dark-state', 'null-space', 'pure', 'mixed')


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Estado ρ de traço 1 sobre uma base de Dicke.

    Attributes:
        basis: Base de Dicke
        matrix: Matriz hermitiana normalizada (traço 1)
        construction: Origem do estado (closed-form, dark-state, null-space, ...)
        log_raw_trace: ln do traço antes da normalização para estados
            ρ ∝ (A†A)⁻¹; +inf quando A tem núcleo (estado escuro)
        generator: Operador A com ρ ∝ (A†A)⁻¹, quando conhecido
        metadata: Modelo, parâmetro, resíduo, estimativa de condição
    """

    basis: DickeBasis
    matrix: np.ndarray
    construction: str = 'mixed'
    log_raw_trace: Optional[float] = None
    generator: Optional[np.ndarray] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise DomainError(f"Construção desconhecida: {self.construction}")
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.shape != (self.basis.dim, self.basis.dim):
            raise DimensionMismatchError(
                f"Matriz {matrix.shape} incompatível com a base de dimensão {self.basis.dim}"
            )
        validate_hermitian(matrix, current_settings().hermiticity_tol)
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def from_matrix(
        cls,
        basis: DickeBasis,
        matrix: np.ndarray,
        construction: str = 'mixed',
        **kwargs
    ) -> 'DensityMatrix':
        """Normaliza o traço e simetriza antes de construir."""
        matrix = np.asarray(matrix, dtype=complex)
        trace = np.real(np.trace(matrix))
        if not np.isfinite(trace) or trace <= 0:
            raise DomainError(f"Traço não positivo: {trace}")
        matrix = matrix / trace
        validate_hermitian(matrix, current_settings().hermiticity_tol)
        return cls(basis, (matrix + matrix.conj().T) / 2, construction, **kwargs)

    @classmethod
    def from_pure(
        cls,
        basis: DickeBasis,
        vector: np.ndarray,
        construction: str = 'pure',
        **kwargs
    ) -> 'DensityMatrix':
        """Projetor |ψ⟩⟨ψ| de um vetor (normalizado aqui)."""
        vector = np.asarray(vector, dtype=complex)
        if vector.shape != (basis.dim,):
            raise DimensionMismatchError(f"Vetor {vector.shape} incompatível com dim {basis.dim}")
        vector = vector / np.linalg.norm(vector)
        return cls(basis, np.outer(vector, vector.conj()), construction, **kwargs)

    @classmethod
    def maximally_mixed(cls, basis: DickeBasis) -> 'DensityMatrix':
        return cls(basis, np.eye(basis.dim) / basis.dim, 'mixed')

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    @property
    def purity(self) -> float:
        """Tr ρ² = Σ|ρ_ij|² para ρ hermitiana."""
        return float(np.sum(np.abs(self.matrix) ** 2))

    def min_eigenvalue(self) -> float:
        """Menor autovalor (teste de positividade)."""
        return float(scipy.linalg.eigh(self.matrix, eigvals_only=True, subset_by_index=[0, 0])[0])

    def is_positive(self, tol: Optional[float] = None) -> bool:
        tol = current_settings().positivity_tol if tol is None else tol
        return self.min_eigenvalue() >= -tol

    def to_frame(self) -> pd.DataFrame:
        """Entradas não nulas em colunas row, col, re, im."""
        rows, cols = np.nonzero(self.matrix)
        values = self.matrix[rows, cols]
        return pd.DataFrame({'row': rows, 'col': cols, 're': values.real, 'im': values.imag})

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT)
        return path

    def metadata_dict(self) -> Dict[str, Any]:
        """Metadados serializáveis (modelo, N, parâmetro, resíduo, condição)."""
        info: Dict[str, Any] = {
            'n_particles': self.basis.n_particles,
            'construction': self.construction,
            'log_raw_trace': self.log_raw_trace,
        }
        info.update(self.metadata)
        return info

    def to_json_metadata(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.metadata_dict(), indent=2, sort_keys=True, default=str))
        return path
