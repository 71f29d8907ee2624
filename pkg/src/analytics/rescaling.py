"""Conversão entre Υ e a dessintonia reescalada η da região crítica."""

from src.utils.validators import validate_particle_number, validate_range


def eta_from_upsilon(n_particles: int, upsilon: float) -> float:
    """η = (Υ − 1)(2N)^{2/3}/2."""
    n = validate_particle_number(n_particles)
    upsilon = validate_range(upsilon, 'upsilon', 0.0)
    return (upsilon - 1.0) * (2 * n) ** (2 / 3) / 2


def upsilon_from_eta(n_particles: int, eta: float) -> float:
    """Υ = 1 + δΥ com δΥ = (2N)^{−2/3}·2η."""
    n = validate_particle_number(n_particles)
    eta = validate_range(eta, 'eta')
    return 1.0 + 2.0 * eta * (2 * n) ** (-2 / 3)


def critical_scale(n_particles: int) -> float:
    """Escala (N/4)^{2/3} das flutuações na região crítica."""
    return (validate_particle_number(n_particles) / 4) ** (2 / 3)
