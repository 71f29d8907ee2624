"""Estados coerentes de spin |θ, φ⟩."""

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, xlogy

from src.utils.validators import validate_range
from .basis import DickeBasis


@dataclass(frozen=True, eq=False)
class SpinCoherentState:
    """Estado coerente apontando na direção (θ, φ) da esfera de Bloch."""

    basis: DickeBasis
    theta: float
    phi: float
    amplitudes: np.ndarray

    @property
    def bloch_vector(self) -> np.ndarray:
        """Vetor de Bloch esperado (N/2)(sinθ cosφ, sinθ sinφ, cosθ)."""
        return self.basis.spin * np.array([
            np.sin(self.theta) * np.cos(self.phi),
            np.sin(self.theta) * np.sin(self.phi),
            np.cos(self.theta),
        ])

    def projector(self) -> np.ndarray:
        """|θ,φ⟩⟨θ,φ|."""
        return np.outer(self.amplitudes, self.amplitudes.conj())


def log_binomial(n: int) -> np.ndarray:
    """ln C(n, n − j) para j = 0..n."""
    j = np.arange(n + 1)
    return gammaln(n + 1) - gammaln(j + 1) - gammaln(n - j + 1)


def coherent_moduli(basis: DickeBasis, thetas) -> np.ndarray:
    """
    Módulos das amplitudes de estados coerentes.

    Args:
        basis: Base de Dicke
        thetas: Ângulo polar ou array de ângulos

    Returns:
        Array (len(thetas), dim) com √C(N, N−j) cos^j(θ/2) sin^(N−j)(θ/2)
    """
    n = basis.n_particles
    j = np.arange(basis.dim)
    half = np.atleast_1d(np.asarray(thetas, dtype=float))[:, None] / 2
    log_moduli = (
        0.5 * log_binomial(n)[None, :]
        + xlogy(j[None, :], np.cos(half))
        + xlogy(n - j[None, :], np.sin(half))
    )
    return np.exp(log_moduli)


def coherent_state(basis: DickeBasis, theta: float, phi: float = 0.0) -> SpinCoherentState:
    """
    Constrói |θ, φ⟩ = (cos θ/2)^N exp(tan(θ/2) e^{iφ} Ŝ⁻)|m = N/2⟩.

    Os coeficientes binomiais são avaliados em log para suportar N grande.

    Args:
        basis: Base de Dicke
        theta: Ângulo polar em [0, π]
        phi: Ângulo azimutal em [0, 2π)

    Returns:
        SpinCoherentState normalizado
    """
    theta = validate_range(theta, 'theta', 0.0, np.pi)
    phi = validate_range(phi, 'phi', 0.0, 2 * np.pi, include_high=False)
    moduli = coherent_moduli(basis, theta)[0]
    phases = np.exp(1j * (basis.n_particles - np.arange(basis.dim)) * phi)
    amplitudes = moduli * phases
    amplitudes /= np.linalg.norm(amplitudes)
    amplitudes.setflags(write=False)
    return SpinCoherentState(basis, theta, phi, amplitudes)
