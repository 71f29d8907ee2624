"""Parâmetros dos dois modelos de spin coletivo."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from src.dicke import DickeBasis, build_operators
from src.dicke.operators import ladder_elements
from src.exceptions import DomainError
from src.utils.validators import validate_particle_number, validate_range


class Model(str, Enum):
    """Modelos suportados."""

    SDM = 'sdm'  # modelo de dissipação com squeezing, salto Ŝx − iζŜy
    CRF = 'crf'  # fluorescência ressonante coletiva (superradiância com drive)


@dataclass(frozen=True)
class ModelParams:
    """
    Modelo, número de partículas e parâmetro de controle.

    A escala de taxa Γ (ou Γ′) é fixada em 1: o estado estacionário só
    depende de razões.

    Attributes:
        model: SDM ou CRF
        n_particles: N
        zeta: ζ ∈ [−1, 1] \\ {0} (SDM)
        upsilon: Υ = 2Ω/Γ ≥ 0 (CRF)
    """

    model: Model
    n_particles: int
    zeta: Optional[float] = None
    upsilon: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'model', Model(self.model))
        object.__setattr__(self, 'n_particles', validate_particle_number(self.n_particles))
        if self.model is Model.SDM:
            if self.zeta is None or self.upsilon is not None:
                raise DomainError("Modelo SDM requer apenas zeta")
            zeta = validate_range(self.zeta, 'zeta', -1.0, 1.0)
            if zeta == 0.0:
                raise DomainError("zeta = 0: estado estacionário não é único")
            object.__setattr__(self, 'zeta', zeta)
        else:
            if self.upsilon is None or self.zeta is not None:
                raise DomainError("Modelo CRF requer apenas upsilon")
            object.__setattr__(self, 'upsilon', validate_range(self.upsilon, 'upsilon', 0.0))

    @classmethod
    def sdm(cls, n_particles: int, zeta: float) -> 'ModelParams':
        return cls(Model.SDM, n_particles, zeta=zeta)

    @classmethod
    def crf(cls, n_particles: int, upsilon: float) -> 'ModelParams':
        return cls(Model.CRF, n_particles, upsilon=upsilon)

    @property
    def parameter(self) -> float:
        """Valor do parâmetro de controle (ζ ou Υ)."""
        return self.zeta if self.model is Model.SDM else self.upsilon

    @property
    def parameter_name(self) -> str:
        return 'zeta' if self.model is Model.SDM else 'upsilon'

    @property
    def basis(self) -> DickeBasis:
        return DickeBasis(self.n_particles)

    @property
    def rate(self) -> float:
        """Taxa do dissipador coletivo, 1/N."""
        return 1.0 / self.n_particles

    def with_parameter(self, value: float) -> 'ModelParams':
        """Cópia com outro valor do parâmetro de controle."""
        if self.model is Model.SDM:
            return ModelParams.sdm(self.n_particles, value)
        return ModelParams.crf(self.n_particles, value)

    def jump_operator(self) -> np.ndarray:
        """
        Operador de salto A na forma em que a dinâmica é (1/N)·D(A).

        Returns:
            SDM: Ŝx − iζŜy; CRF: Ŝ⁻ + iNΥ/2 (inclui o drive −i[(Υ/2)Ŝx, ρ])
        """
        basis = self.basis
        lowering = np.diag(ladder_elements(basis)[1:], k=1).astype(complex)
        if self.model is Model.SDM:
            a, b = (1 + self.zeta) / 2, (1 - self.zeta) / 2
            return a * lowering + b * lowering.T
        return lowering + 0.5j * self.n_particles * self.upsilon * np.eye(basis.dim)

    def master_equation_terms(self):
        """
        Hamiltoniano e operador de salto da equação mestra original.

        Returns:
            (H, L) com ∂ₜρ = −i[H, ρ] + (1/N)·D(L)ρ
        """
        ops = build_operators(self.basis)
        if self.model is Model.SDM:
            return np.zeros((self.basis.dim,) * 2, dtype=complex), self.jump_operator()
        return 0.5 * self.upsilon * ops['Sx'].matrix, ops['Sminus'].matrix

    def label(self) -> str:
        return f"{self.model.value}(N={self.n_particles}, {self.parameter_name}={self.parameter:.6g})"
