"""
Previsões analíticas para o modelo de dissipação com squeezing (SDM)
Linearização, fórmulas de Bessel para N par e ímpar, ótimo via W₋₁.
"""

from typing import List, Optional

import numpy as np

from src.config import current_settings
from src.special_functions import (
    bessel_ratio,
    lambert_w_minus1,
    lambert_w_minus1_asymptotic,
    log_bessel_I
)
from src.utils.validators import validate_parity, validate_particle_number, validate_range
from src.exceptions import DomainError
from .results import AnalyticResult, AnalyticVariant


def _validate_zeta(zeta: float) -> float:
    return validate_range(zeta, 'zeta', 0.0, 1.0, include_low=False)


def linearization_valid(p_variance: float, n_particles: Optional[int] = None) -> bool:
    """Critério de polarização forte: 2⟨p̂²⟩ ≤ fração·N, ou ⟨p̂²⟩ ≤ limite sem N."""
    settings = current_settings()
    if n_particles is None:
        return p_variance <= settings.linearization_max_p_variance
    return 2 * p_variance <= settings.linearization_validity_fraction * n_particles


class SdmPredictions:
    """Fórmulas fechadas do SDM."""

    @staticmethod
    def linearized(zeta: float, n_particles: Optional[int] = None) -> AnalyticResult:
        """
        Aproximação linear de Holstein-Primakoff: 2⟨x̂²⟩ = 1/(2⟨p̂²⟩) = ζ.

        Args:
            zeta: ζ ∈ (0, 1]
            n_particles: N (opcional, para Ŝx², Ŝz e o critério de validade)

        Returns:
            AnalyticResult com x_var, p_var, xi2 (e Sz, Sx2 quando N é dado)
        """
        zeta = _validate_zeta(zeta)
        values = {'x_var': zeta / 2, 'p_var': 1 / (2 * zeta), 'xi2': zeta}
        if n_particles is not None:
            n = validate_particle_number(n_particles)
            values.update({'Sz': -n / 2, 'Sx2': n * zeta / 4})
        valid = linearization_valid(values['p_var'], n_particles)
        warnings = () if valid else ('linearization invalid',)
        return AnalyticResult(AnalyticVariant.SDM_LINEARIZED, values, valid,
                              AnalyticVariant.SDM_LINEARIZED.regime, warnings)

    @staticmethod
    def even(n_particles: int, zeta: float) -> AnalyticResult:
        """
        Estado escuro para N par em aproximação de fase.

        ⟨Ŝz⟩ = −(N/2)·I₁(ζN)/I₀(ζN), ⟨Ŝx²⟩ = (ζN/4)·I₁/I₀, ξ² = ζ·I₀/I₁.
        """
        n = validate_particle_number(n_particles)
        zeta = _validate_zeta(zeta)
        if n < 2:
            raise DomainError(f"Fórmula para N par requer N ≥ 2, recebido {n}")
        ratio = bessel_ratio(zeta * n)
        sx2 = zeta * n / 4 * ratio
        # I₁/I₀ ≈ ζN/2 para ζN → 0, logo ξ² → 2/N
        xi2 = zeta / ratio if ratio > 0 else 2 / n
        values = {'Sz': -n / 2 * ratio, 'Sx': 0.0, 'Sx2': sx2, 'var_sx': sx2, 'xi2': xi2}
        warnings = () if n % 2 == 0 else ('N ímpar: use sdm_odd',)
        return AnalyticResult(AnalyticVariant.SDM_EVEN, values, n % 2 == 0,
                              AnalyticVariant.SDM_EVEN.regime, warnings)

    @staticmethod
    def odd(n_particles: int, zeta: float) -> AnalyticResult:
        """
        Estado misto para N ímpar: autovalor dominante mais bulk.

        Args:
            n_particles: N ímpar
            zeta: ζ ∈ (0, 1]

        Returns:
            AnalyticResult com lambda0_log, Sz, Sx2, xi2, xi2_approx e a
            separação xi2_dominant + xi2_bulk
        """
        n = validate_particle_number(n_particles)
        zeta = _validate_zeta(zeta)
        validate_parity(n, 'odd')
        x = zeta * n
        ratio = bessel_ratio(x)
        # ln λ₀ = ln π² + 2 ln I₀(ζN)
        lambda0_log = 2 * np.log(np.pi) + 2 * log_bessel_I(0, x)
        dominant_sx2 = x / 4 * ratio
        bulk_sx2 = n / (1 + zeta) * np.exp(-lambda0_log)
        xi2_dominant = zeta / ratio
        xi2_bulk = 4 / np.pi ** 2 * np.exp(-2 * log_bessel_I(1, x))
        values = {
            'lambda0_log': float(lambda0_log),
            'Sz': -n / 2 * ratio,
            'Sx': 0.0,
            'Sx2': dominant_sx2 + bulk_sx2,
            'Sx2_dominant': dominant_sx2,
            'Sx2_bulk': bulk_sx2,
            'xi2': xi2_dominant + xi2_bulk,
            'xi2_dominant': xi2_dominant,
            'xi2_bulk': xi2_bulk,
            'xi2_approx': zeta + 8 * x / np.pi * np.exp(-2 * x),
        }
        warnings: List[str] = []
        if x < 1:
            warnings.append('ζN < 1: estado dominante não isolado')
        return AnalyticResult(AnalyticVariant.SDM_ODD, values, x >= 1,
                              AnalyticVariant.SDM_ODD.regime, tuple(warnings))

    @staticmethod
    def optimum(n_particles: int) -> AnalyticResult:
        """
        Squeezing ótimo para N ímpar.

        ζ_min·N = ½[1 − W₋₁(−πe/8N)], ξ²_min = ζ_min(1 + 1/(2ζ_min·N − 1)),
        e as formas com a expansão logarítmica de W₋₁.

        Args:
            n_particles: N ímpar, N ≥ 11

        Returns:
            AnalyticResult com zeta_min, xi2_min, zeta_min_asymptotic, xi2_min_asymptotic
        """
        n = validate_particle_number(n_particles)
        validate_parity(n, 'odd')
        if n < 11:
            raise DomainError(f"Ótimo analítico requer N ≥ 11, recebido {n}")
        argument = -np.pi * np.e / (8 * n)
        w = lambert_w_minus1(argument)
        zeta_n = (1 - w) / 2
        zeta_min = zeta_n / n
        log_term = np.log(8 * n / (np.pi * np.e))
        loglog = np.log(log_term)
        values = {
            'lambert_w': w,
            'zeta_min_n': zeta_n,
            'zeta_min': zeta_min,
            'xi2_min': zeta_min * (1 + 1 / (2 * zeta_n - 1)),
            'lambert_w_asymptotic': lambert_w_minus1_asymptotic(argument),
            'zeta_min_n_asymptotic': (np.log(8 * n / np.pi) + loglog) / 2,
            'xi2_min_asymptotic': (np.log(8 * n * np.e / np.pi) + loglog) / (2 * n),
        }
        values['zeta_min_asymptotic'] = values['zeta_min_n_asymptotic'] / n
        return AnalyticResult(AnalyticVariant.SDM_OPTIMUM, values, True,
                              AnalyticVariant.SDM_OPTIMUM.regime)

    @staticmethod
    def bulk_sum(n_particles: int, zeta: float) -> float:
        """Soma semiclássica do bulk Σ_{k≥1} λ_k⟨λ_k|Ŝx²|λ_k⟩ ≈ N/(1+ζ)."""
        n = validate_particle_number(n_particles)
        zeta = validate_range(zeta, 'zeta', 0.0, 1.0)
        return n / (1 + zeta)


sdm_linearized = SdmPredictions.linearized
sdm_even = SdmPredictions.even
sdm_odd = SdmPredictions.odd
sdm_optimum = SdmPredictions.optimum
sdm_bulk_sum = SdmPredictions.bulk_sum
