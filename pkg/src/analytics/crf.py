"""
Previsões analíticas para a fluorescência ressonante coletiva (CRF)
Campo médio, distribuição clássica acima do limiar, linearização abaixo
do limiar e região crítica em termos de η.
"""

import logging
from typing import Dict, List, Optional

import numpy as np
from scipy.integrate import dblquad

from src.exceptions import DomainError
from src.special_functions import (
    lambert_w_minus1,
    lambert_w_minus1_asymptotic,
    mu0_integral,
    sextic_integral_log
)
from src.utils.validators import validate_particle_number, validate_range
from .rescaling import critical_scale, eta_from_upsilon
from .results import AnalyticResult, AnalyticVariant
from .sdm import linearization_valid

logger = logging.getLogger(__name__)

SADDLE_LIMIT = -1.0


def classical_moments(n_particles: int, upsilon: float, epsrel: float = 1e-8) -> Dict[str, float]:
    """
    Momentos da distribuição clássica ρ_cl ∝ 1/(sin²θ + Υ² − 2Υ sinθ sinφ).

    Integração com a medida sinθ dθ dφ da esfera.

    Args:
        n_particles: N
        upsilon: Υ > 1
        epsrel: Tolerância relativa do dblquad

    Returns:
        Dicionário com Sy, Sz, Sx2
    """
    n = validate_particle_number(n_particles)
    upsilon = validate_range(upsilon, 'upsilon', 1.0, include_low=False)

    def weight(phi: float, theta: float) -> float:
        s = np.sin(theta)
        return s / (s * s + upsilon ** 2 - 2 * upsilon * s * np.sin(phi))

    def moment(observable) -> float:
        value, _ = dblquad(
            lambda phi, theta: weight(phi, theta) * observable(phi, theta),
            0.0, np.pi, 0.0, 2 * np.pi, epsrel=epsrel
        )
        return value

    norm = moment(lambda phi, theta: 1.0)
    return {
        'Sy': n / 2 * moment(lambda phi, theta: np.sin(theta) * np.sin(phi)) / norm,
        'Sz': n / 2 * moment(lambda phi, theta: np.cos(theta)) / norm,
        'Sx2': (n / 2) ** 2 * moment(lambda phi, theta: (np.sin(theta) * np.cos(phi)) ** 2) / norm,
    }


class CrfPredictions:
    """Fórmulas fechadas da superradiância com drive."""

    @staticmethod
    def mean_field(n_particles: int, upsilon: float) -> AnalyticResult:
        """Vetor de Bloch (N/2)[0, Υ, −√(1−Υ²)] no hemisfério sul."""
        n = validate_particle_number(n_particles)
        upsilon = validate_range(upsilon, 'upsilon', 0.0, 1.0)
        values = {
            'Sx': 0.0,
            'Sy': n * upsilon / 2,
            'Sz': -n / 2 * np.sqrt(1 - upsilon ** 2),
        }
        return AnalyticResult(AnalyticVariant.CRF_MEAN_FIELD, values, True,
                              AnalyticVariant.CRF_MEAN_FIELD.regime)

    @staticmethod
    def above_threshold(n_particles: int, upsilon: float, with_moments: bool = True) -> AnalyticResult:
        """
        ⟨Ŝy⟩ = (N/2Υ)[Υ² − √(Υ²−1)/arcsin(1/Υ)] e momentos clássicos.

        Args:
            n_particles: N
            upsilon: Υ > 1
            with_moments: Integra também a distribuição clássica na esfera

        Returns:
            AnalyticResult com Sy (fechado) e Sy_classical, Sz, Sx2 quando pedidos
        """
        n = validate_particle_number(n_particles)
        upsilon = validate_range(upsilon, 'upsilon', 1.0, include_low=False)
        bracket = upsilon ** 2 - np.sqrt(upsilon ** 2 - 1) / np.arcsin(1 / upsilon)
        values = {'Sy': n / (2 * upsilon) * bracket}
        if with_moments:
            moments = classical_moments(n, upsilon)
            values.update({
                'Sy_classical': moments['Sy'],
                'Sz': moments['Sz'],
                'Sx': 0.0,
                'Sx2': moments['Sx2'],
            })
        return AnalyticResult(AnalyticVariant.CRF_ABOVE_THRESHOLD, values, True,
                              AnalyticVariant.CRF_ABOVE_THRESHOLD.regime)

    @staticmethod
    def below_threshold(upsilon: float, n_particles: Optional[int] = None) -> AnalyticResult:
        """
        Linearização abaixo do limiar: 2⟨x̂²⟩ = 1/(2⟨p̂²⟩) = cos α = √(1−Υ²).

        Args:
            upsilon: 0 ≤ Υ < 1
            n_particles: N (opcional, para o critério de validade)
        """
        upsilon = validate_range(upsilon, 'upsilon', 0.0, 1.0, include_high=False)
        cos_alpha = np.sqrt(1 - upsilon ** 2)
        values = {'x_var': cos_alpha / 2, 'p_var': 1 / (2 * cos_alpha), 'xi2': cos_alpha}
        if n_particles is not None:
            n = validate_particle_number(n_particles)
            values.update({
                'Sy': n * upsilon / 2,
                'Sz': -n / 2 * cos_alpha,
                'Sx': 0.0,
                'Sx2': n * cos_alpha / 4,
            })
        valid = linearization_valid(values['p_var'], n_particles)
        warnings = () if valid else ('linearization invalid',)
        return AnalyticResult(AnalyticVariant.CRF_BELOW_THRESHOLD, values, valid,
                              AnalyticVariant.CRF_BELOW_THRESHOLD.regime, warnings)

    @staticmethod
    def critical(
        n_particles: int,
        eta: Optional[float] = None,
        upsilon: Optional[float] = None
    ) -> AnalyticResult:
        """
        Região crítica: μ̃₀, ⟨Ŝx²⟩ (ponto de sela e forma uniforme), ⟨Ŝz⟩,
        ⟨Ŝy⟩ − N/2 e ξ² ≈ Var(Ŝx)/(N/4).

        Args:
            n_particles: N
            eta: Dessintonia reescalada η ≤ 0
            upsilon: Alternativa a eta (convertido por eta_from_upsilon)

        Returns:
            AnalyticResult; 'Sx2' e 'xi2' são as formas uniformes, válidas até η = 0
        """
        n = validate_particle_number(n_particles)
        if (eta is None) == (upsilon is None):
            raise DomainError("Informe exatamente um entre eta e upsilon")
        if eta is None:
            eta = eta_from_upsilon(n, upsilon)
        eta = validate_range(eta, 'eta', high=0.0)
        scale = critical_scale(n)
        modulus = abs(eta)

        mu0 = mu0_integral(eta)
        log_i0 = sextic_integral_log(0, eta).log_value
        log_i2 = sextic_integral_log(2, eta).log_value
        i2_zero = np.sqrt(np.pi / 6)
        # termos divididos por I₀(η) calculados em log
        i2_over_i0 = np.exp(log_i2 - log_i0)
        subtraction = i2_zero * np.exp(-log_i0)
        bulk = (n / 3) / np.sqrt(2 * np.pi) * np.exp(-log_i0)

        sx2_saddle = scale * np.sqrt(modulus) * (
            1 + 2 * n / (3 * np.pi) * np.exp(-8 / 3 * modulus ** 1.5)
        )
        sx2_uniform = scale * ((i2_over_i0 - subtraction) / 2 + bulk)
        values = {
            'eta': eta,
            'mu0_tilde_log': mu0.log_quadrature,
            'mu0_tilde_saddle_log': mu0.log_saddle,
            'Sx': 0.0,
            'Sx2': sx2_uniform,
            'Sx2_saddle': sx2_saddle,
            'Sz': -scale * i2_over_i0,
            'Sy_deficit': (2 * n) ** (1 / 3) * eta / 2 - np.sqrt(2 / np.pi) * scale * np.exp(-log_i0),
            'xi2': sx2_uniform / (n / 4),
            'xi2_saddle': sx2_saddle / (n / 4),
        }
        values['Sy'] = n / 2 + values['Sy_deficit']

        warnings: List[str] = []
        if eta > SADDLE_LIMIT:
            message = f"η = {eta:.3g} > −1: formas de ponto de sela fora do regime"
            logger.warning(message)
            warnings.append(message)
        return AnalyticResult(AnalyticVariant.CRF_CRITICAL, values, True,
                              AnalyticVariant.CRF_CRITICAL.regime, tuple(warnings))

    @staticmethod
    def optimum(n_particles: int) -> AnalyticResult:
        """
        Squeezing ótimo na região crítica.

        |η|_min = [1/8 − (3/8)W₋₁(−πe^{1/3}/2N)]^{2/3},
        ξ²_min = (N/4)^{−1/3}·√|η|·8|η|^{3/2}/(8|η|^{3/2} − 1).

        Args:
            n_particles: N ≥ 10

        Returns:
            AnalyticResult com eta_min (negativo), abs_eta_min, xi2_min e formas assintóticas
        """
        n = validate_particle_number(n_particles)
        if n < 10:
            raise DomainError(f"Ótimo analítico requer N ≥ 10, recebido {n}")
        argument = -np.pi * np.exp(1 / 3) / (2 * n)
        w = lambert_w_minus1(argument)
        cube = 1 / 8 - 3 / 8 * w
        abs_eta = cube ** (2 / 3)
        log_term = np.log(2 * n / np.pi)
        values = {
            'lambert_w': w,
            'abs_eta_min': abs_eta,
            'eta_min': -abs_eta,
            'xi2_min': (n / 4) ** (-1 / 3) * np.sqrt(abs_eta) * 8 * cube / (8 * cube - 1),
            'lambert_w_asymptotic': lambert_w_minus1_asymptotic(argument),
            'abs_eta_min_asymptotic': (3 / 8 * log_term) ** (2 / 3),
            'xi2_min_asymptotic': (3 / (2 * n) * log_term) ** (1 / 3),
        }
        warnings = () if abs_eta > 1 else ('|η|_min < 1: fora do regime de ponto de sela',)
        return AnalyticResult(AnalyticVariant.CRF_OPTIMUM, values, abs_eta > 1,
                              AnalyticVariant.CRF_OPTIMUM.regime, warnings)

    @staticmethod
    def bulk_sum(n_particles: int, upsilon: float) -> float:
        """
        Soma do bulk (N/3)[1 − (1−Υ²)^{3/2}]/Υ² para 0 ≤ Υ ≤ 1.

        Perto de Υ = 0 usa a série (N/3)(3/2 − 3Υ²/8), que tende a N/2.
        """
        n = validate_particle_number(n_particles)
        upsilon = validate_range(upsilon, 'upsilon', 0.0, 1.0)
        if upsilon < 1e-4:
            return n / 3 * (1.5 - 0.375 * upsilon ** 2)
        return n / 3 * (1 - (1 - upsilon ** 2) ** 1.5) / upsilon ** 2


crf_mean_field = CrfPredictions.mean_field
crf_above_threshold = CrfPredictions.above_threshold
crf_below_threshold = CrfPredictions.below_threshold
crf_critical = CrfPredictions.critical
crf_optimum = CrfPredictions.optimum
crf_bulk_sum = CrfPredictions.bulk_sum
crf_classical_moments = classical_moments
