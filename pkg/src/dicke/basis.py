"""Base de Dicke do setor simétrico de spin máximo S = N/2."""

from dataclasses import dataclass

import numpy as np

from src.exceptions import DomainError
from src.utils.validators import validate_particle_number


@dataclass(frozen=True)
class DickeBasis:
    """Base |S, m⟩ com m em ordem crescente: o índice j corresponde a m = −N/2 + j.

    Attributes:
        n_particles: Número N de sistemas de dois níveis
    """

    n_particles: int

    def __post_init__(self):
        object.__setattr__(self, 'n_particles', validate_particle_number(self.n_particles))

    @property
    def dim(self) -> int:
        """Dimensão N + 1 do setor de Dicke."""
        return self.n_particles + 1

    @property
    def spin(self) -> float:
        """Spin total S = N/2."""
        return self.n_particles / 2

    @property
    def m_values(self) -> np.ndarray:
        """Autovalores de Ŝz em ordem crescente."""
        return np.arange(self.dim, dtype=float) - self.spin

    def index_of(self, m: float) -> int:
        """
        Índice do estado |m⟩ na base.

        Args:
            m: Autovalor de Ŝz

        Returns:
            Índice j com m = −N/2 + j
        """
        j = m + self.spin
        if not float(j).is_integer() or not 0 <= j < self.dim:
            raise DomainError(f"m = {m} não pertence ao setor com N = {self.n_particles}")
        return int(j)

    def basis_vector(self, m: float) -> np.ndarray:
        """Vetor |m⟩ como array complexo."""
        vector = np.zeros(self.dim, dtype=complex)
        vector[self.index_of(m)] = 1.0
        return vector

    def south_pole(self) -> np.ndarray:
        """Estado |m = −N/2⟩."""
        return self.basis_vector(-self.spin)

    def north_pole(self) -> np.ndarray:
        """Estado |m = +N/2⟩."""
        return self.basis_vector(self.spin)
