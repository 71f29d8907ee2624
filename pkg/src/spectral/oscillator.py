"""
Oscilador anarmônico da região crítica
Autoproblema (ŷ − iq̂² − iη)(ŷ + iq̂² + iη)|μ_k⟩ = (1/μ̃_k)|μ_k⟩ numa grade
periódica, com ŷ = i d/dq aplicado espectralmente.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg
from scipy.fft import fft, fftfreq, ifft

from src.config import current_settings
from src.exceptions import ConvergenceError, DomainError
from .fitting import LogLogFit, tail_exponent

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = (10, 50)


@dataclass(frozen=True)
class OscillatorGrid:
    """Grade periódica uniforme q ∈ [−L, L)."""

    half_width: float
    n_points: int

    def __post_init__(self):
        if self.half_width <= 0 or self.n_points < 8:
            raise DomainError(f"Grade inválida: L = {self.half_width}, n = {self.n_points}")

    @classmethod
    def for_eta(cls, eta: float, n_points: Optional[int] = None) -> 'OscillatorGrid':
        """Grade padrão: L = max(8, 3 + 2√|η| + 4)."""
        n_points = n_points or current_settings().oscillator_points
        return cls(max(8.0, 3.0 + 2.0 * np.sqrt(abs(eta)) + 4.0), n_points)

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / self.n_points

    @property
    def q(self) -> np.ndarray:
        return -self.half_width + self.spacing * np.arange(self.n_points)

    @property
    def wavenumbers(self) -> np.ndarray:
        k = 2 * np.pi * fftfreq(self.n_points, d=self.spacing)
        if self.n_points % 2 == 0:
            k[self.n_points // 2] = 0.0
        return k

    def refined(self) -> 'OscillatorGrid':
        """Mesma janela com metade do espaçamento."""
        return OscillatorGrid(self.half_width, 2 * self.n_points)


def y_operator(grid: OscillatorGrid) -> np.ndarray:
    """Matriz densa de ŷ = i d/dq (diagonal −k no espaço de Fourier)."""
    transform = fft(np.eye(grid.n_points), axis=0)
    y = ifft(-grid.wavenumbers[:, None] * transform, axis=0)
    return (y + y.conj().T) / 2


@dataclass(frozen=True, eq=False)
class OscillatorProblem:
    """Discretização de M†M com M = ŷ + iq̂² + iη."""

    eta: float
    grid: OscillatorGrid
    y: np.ndarray
    operator: np.ndarray


def build_problem(eta: float, grid: Optional[OscillatorGrid] = None) -> OscillatorProblem:
    """
    Monta o operador M†M.

    Args:
        eta: Dessintonia reescalada
        grid: Grade (padrão OscillatorGrid.for_eta)

    Returns:
        OscillatorProblem
    """
    eta = float(eta)
    grid = grid or OscillatorGrid.for_eta(eta)
    if grid.half_width < 3.0 + 2.0 * np.sqrt(abs(eta)):
        raise DomainError(f"Grade curta demais para η = {eta}: L = {grid.half_width}")
    y = y_operator(grid)
    m = y + 1j * np.diag(grid.q ** 2 + eta)
    operator = m.conj().T @ m
    return OscillatorProblem(eta, grid, y, (operator + operator.conj().T) / 2)


@dataclass(frozen=True, eq=False)
class OscillatorSolution:
    """
    Autovalores μ̃_k e momentos ⟨ŷ²⟩_k, ⟨q̂²⟩_k dos primeiros estados.

    Attributes:
        refinement_change: Variação relativa de 1/μ̃₀ ao reduzir o espaçamento à metade
    """

    eta: float
    grid: OscillatorGrid
    mu_tilde: np.ndarray
    y2: np.ndarray
    q2: np.ndarray
    refinement_change: Optional[float] = None

    @property
    def mu0_tilde(self) -> float:
        return float(self.mu_tilde[0])

    @property
    def log_mu0_tilde(self) -> float:
        return float(np.log(self.mu_tilde[0]))

    @property
    def y_variance(self) -> float:
        """⟨μ₀|ŷ²|μ₀⟩."""
        return float(self.y2[0])

    def tail_exponents(self, window: Tuple[int, int] = DEFAULT_WINDOW) -> dict:
        """Expoentes de μ̃_k, ⟨ŷ²⟩_k e ⟨q̂²⟩_k na janela de k."""
        fits = {}
        for name, values in (('mu_tilde', self.mu_tilde), ('y2', self.y2), ('q2', self.q2)):
            fit: LogLogFit = tail_exponent(values, window)
            fits[name] = fit.slope
        return fits


def _lowest_states(problem: OscillatorProblem, n_states: int):
    n_states = min(n_states, problem.grid.n_points)
    values, vectors = scipy.linalg.eigh(problem.operator, subset_by_index=[0, n_states - 1])
    grid = problem.grid
    # ‖M‖ ≤ max|k| + max|q² + η|
    bound = (np.abs(grid.wavenumbers).max() + np.abs(grid.q ** 2 + problem.eta).max()) ** 2
    floor = 1e3 * np.finfo(float).eps * bound
    if values[0] <= floor:
        raise ConvergenceError(
            f"1/μ̃₀ = {values[0]:.3e} abaixo da precisão da grade para η = {problem.eta}"
        )
    y2 = np.sum(np.abs(problem.y @ vectors) ** 2, axis=0)
    q2 = problem.grid.q ** 2 @ (np.abs(vectors) ** 2)
    return values, y2, q2


def solve_oscillator(
    eta: float,
    grid: Optional[OscillatorGrid] = None,
    n_states: int = 60,
    check_refinement: bool = True
) -> OscillatorSolution:
    """
    Resolve o oscilador e (opcionalmente) confere a convergência na grade.

    Args:
        eta: Dessintonia reescalada
        grid: Grade inicial
        n_states: Número de estados retornados
        check_refinement: Repete com espaçamento pela metade e compara 1/μ̃₀

    Returns:
        OscillatorSolution (da grade refinada quando check_refinement)

    Raises:
        ConvergenceError: Se 1/μ̃₀ variar mais que a tolerância no refinamento
    """
    grid = grid or OscillatorGrid.for_eta(eta)
    values, y2, q2 = _lowest_states(build_problem(eta, grid), n_states)
    change = None
    if check_refinement:
        fine = grid.refined()
        fine_values, y2, q2 = _lowest_states(build_problem(eta, fine), n_states)
        change = float(abs(fine_values[0] - values[0]) / fine_values[0])
        if change > current_settings().oscillator_refinement_tol:
            raise ConvergenceError(
                f"Oscilador não convergiu na grade (η = {eta}, variação {change:.2%})",
                best_estimate=float(1 / fine_values[0]),
                error_bound=float(change / fine_values[0]),
            )
        values, grid = fine_values, fine
    logger.debug("Oscilador η = %.3f: μ̃₀ = %.6e", eta, 1 / values[0])
    return OscillatorSolution(float(eta), grid, 1 / values, y2, q2, change)
