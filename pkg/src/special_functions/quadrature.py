"""
Quadraturas semi-infinitas em domínio logarítmico
Integrais ∫₀^∞ e^{−v⁶/6 − 2ηv²} vᵏ dv e ∫₀^∞ e^{−2ηq − 2q³/3} dq.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import xlogy

from src.config import current_settings
from src.exceptions import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

MAX_EXPANSIONS = 200


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerância relativa, corte do integrando e limite de subdivisões."""

    rtol: float = 1e-10
    cutoff: float = 1e-18
    limit: int = 200

    @classmethod
    def from_settings(cls) -> 'QuadratureSpec':
        settings = current_settings()
        return cls(settings.quadrature_rtol, settings.quadrature_cutoff, settings.quadrature_limit)


@dataclass(frozen=True)
class QuadratureResult:
    """Resultado de uma integral em forma logarítmica."""

    log_value: float
    log_error: float
    converged: bool
    upper_limit: float
    peak: float

    @property
    def value(self) -> float:
        """Valor linear (inf quando excede o intervalo representável)."""
        with np.errstate(over='ignore'):
            return float(np.exp(self.log_value))

    @property
    def error(self) -> float:
        with np.errstate(over='ignore'):
            return float(np.exp(self.log_error))

    @property
    def relative_error(self) -> float:
        return float(np.exp(self.log_error - self.log_value))


def integrate_log_density(
    log_integrand: Callable[[float], float],
    peak: float,
    spec: Optional[QuadratureSpec] = None
) -> QuadratureResult:
    """
    Integra e^{g(v)} em [0, ∞) com o fator do pico separado.

    O intervalo é truncado onde o integrando cai abaixo de cutoff × pico
    (raiz encontrada por brentq) e então subdividido adaptativamente.

    Args:
        log_integrand: g(v), unimodal em [0, ∞)
        peak: Posição do máximo de g
        spec: Parâmetros da quadratura

    Returns:
        QuadratureResult com ln do valor e do erro
    """
    spec = spec or QuadratureSpec.from_settings()
    g_max = float(log_integrand(peak))
    target = g_max + np.log(spec.cutoff)

    step = max(1.0, peak)
    upper = peak + step
    for _ in range(MAX_EXPANSIONS):
        if log_integrand(upper) < target:
            break
        step *= 2
        upper = peak + step
    else:
        raise ConvergenceError(f"Integrando não decai após v = {upper:.3e}")
    upper = brentq(lambda v: log_integrand(v) - target, peak, upper, xtol=1e-12)

    def scaled(v: float) -> float:
        with np.errstate(divide='ignore'):
            return float(np.exp(log_integrand(v) - g_max))

    points = [peak] if 0.0 < peak < upper else None
    output = quad(
        scaled, 0.0, upper,
        epsabs=0.0, epsrel=spec.rtol, limit=spec.limit,
        points=points, full_output=1
    )
    value, error = output[0], output[1]
    converged = len(output) == 3
    if not converged:
        logger.warning("Quadratura não convergiu: %s", output[3])
    with np.errstate(divide='ignore'):
        log_error = np.log(error) + g_max
    return QuadratureResult(
        log_value=float(np.log(value) + g_max),
        log_error=float(log_error),
        converged=converged,
        upper_limit=float(upper),
        peak=float(peak),
    )


def _sextic_peak(k: int, eta: float) -> float:
    # máximo de −v⁶/6 − 2ηv² + k ln v: raiz positiva de u³ + 4ηu − k (u = v²)
    if k == 0:
        return float(np.sqrt(np.sqrt(max(-4.0 * eta, 0.0))))
    upper = 2.0 * np.sqrt(abs(eta)) + 2.0
    u = brentq(lambda u: u ** 3 + 4.0 * eta * u - k, 0.0, upper, xtol=1e-14)
    return float(np.sqrt(u))


def sextic_integral_log(k: int, eta: float, spec: Optional[QuadratureSpec] = None) -> QuadratureResult:
    """
    Integral ∫₀^∞ e^{−v⁶/6 − 2ηv²} vᵏ dv em forma logarítmica.

    Args:
        k: 0 ou 2
        eta: Dessintonia reescalada
        spec: Parâmetros da quadratura

    Returns:
        QuadratureResult
    """
    if k not in (0, 2):
        raise DomainError(f"Potência k deve ser 0 ou 2, recebido {k}")
    eta = float(eta)
    if not np.isfinite(eta):
        raise DomainError(f"η deve ser finito, recebido {eta}")

    def log_integrand(v: float) -> float:
        return -v ** 6 / 6 - 2 * eta * v ** 2 + xlogy(k, v)

    return integrate_log_density(log_integrand, _sextic_peak(k, eta), spec)


def sextic_gaussian_integral(k: int, eta: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    Integral ∫₀^∞ e^{−v⁶/6 − 2ηv²} vᵏ dv.

    Raises:
        ConvergenceError: Com a melhor estimativa e o limite de erro
    """
    result = sextic_integral_log(k, eta, spec)
    if not result.converged:
        raise ConvergenceError(
            f"Integral sêxtica (k={k}, η={eta}) não convergiu",
            best_estimate=result.value,
            error_bound=result.error,
        )
    return result.value


@dataclass(frozen=True)
class Mu0Integral:
    """μ̃₀ pela quadratura exata e pela forma de ponto de sela."""

    eta: float
    log_quadrature: float
    log_saddle: float
    valid: bool
    validity_note: str

    @property
    def quadrature(self) -> float:
        with np.errstate(over='ignore'):
            return float(np.exp(self.log_quadrature))

    @property
    def saddle(self) -> float:
        with np.errstate(over='ignore'):
            return float(np.exp(self.log_saddle))


def mu0_integral(eta: float, spec: Optional[QuadratureSpec] = None) -> Mu0Integral:
    """
    Maior autovalor reescalado μ̃₀ ≈ [∫₀^∞ e^{−2ηq − 2q³/3} dq]².

    Args:
        eta: Dessintonia reescalada (η ≤ 0)
        spec: Parâmetros da quadratura

    Returns:
        Mu0Integral com as formas de quadratura e de ponto de sela (em log)
    """
    eta = float(eta)
    if not np.isfinite(eta) or eta > 0:
        raise DomainError(f"μ̃₀ requer η ≤ 0, recebido {eta}")

    def log_integrand(q: float) -> float:
        return -2 * eta * q - 2 * q ** 3 / 3

    result = integrate_log_density(log_integrand, float(np.sqrt(-eta)), spec)
    if not result.converged:
        raise ConvergenceError(
            f"Quadratura de μ̃₀ (η={eta}) não convergiu",
            best_estimate=result.value ** 2,
            error_bound=2 * result.value * result.error,
        )

    modulus = abs(eta)
    if modulus > 0:
        log_saddle = np.log(np.pi / 2) + 8 * modulus ** 1.5 / 3 - 0.5 * np.log(modulus)
    else:
        log_saddle = float('inf')
    valid = eta <= -1.0
    note = "ponto de sela válido para η ≲ −1" if valid else "η > −1: forma de ponto de sela fora do regime"
    return Mu0Integral(eta, 2 * result.log_value, float(log_saddle), valid, note)
