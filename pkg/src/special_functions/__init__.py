"""
Módulo Special Functions - Bessel, Lambert W₋₁ e quadraturas
"""

from .bessel import bessel_I, bessel_ratio, log_bessel_I
from .lambert import lambert_w_minus1, lambert_w_minus1_asymptotic, BRANCH_POINT
from .quadrature import (
    QuadratureSpec,
    QuadratureResult,
    Mu0Integral,
    integrate_log_density,
    sextic_integral_log,
    sextic_gaussian_integral,
    mu0_integral
)

__all__ = [
    'bessel_I',
    'bessel_ratio',
    'log_bessel_I',
    'lambert_w_minus1',
    'lambert_w_minus1_asymptotic',
    'BRANCH_POINT',
    'QuadratureSpec',
    'QuadratureResult',
    'Mu0Integral',
    'integrate_log_density',
    'sextic_integral_log',
    'sextic_gaussian_integral',
    'mu0_integral'
]
