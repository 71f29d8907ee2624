"""
Estados estacionários exatos em forma fechada
Estado escuro do SDM (N par), estado misto do SDM (N ímpar) e estado da
superradiância com drive, todos na forma ρ ∝ (A†A)⁻¹ = A⁻¹A⁻†.

Os inversos de matrizes bidiagonais são montados em domínio logarítmico:
as entradas variam como e^{2ζN} ou Υ^{−N} e estourariam em forma linear.
"""

import dataclasses
import logging
from typing import List, Tuple

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

from src.config import current_settings
from src.dicke import DickeBasis, rotate_about_x
from src.dicke.operators import ladder_elements
from src.exceptions import DomainError, IllConditionedError
from src.utils.validators import validate_parity
from .density import DensityMatrix
from .params import Model, ModelParams

logger = logging.getLogger(__name__)

Block = Tuple[np.ndarray, np.ndarray, float]


def _complex_log(values: np.ndarray) -> np.ndarray:
    with np.errstate(divide='ignore'):
        return np.log(np.asarray(values, dtype=complex))


def bidiagonal_inverse_scaled(diag: np.ndarray, off: np.ndarray, lower: bool) -> Tuple[np.ndarray, float]:
    """
    Inversa de uma matriz bidiagonal com fator de escala separado.

    Args:
        diag: Diagonal (n entradas, todas não nulas)
        off: Sub (lower=True) ou superdiagonal (n − 1 entradas)
        lower: Tipo da matriz

    Returns:
        (X̃, M) com inversa = e^{M}·X̃ e max|X̃| = 1
    """
    diag = np.asarray(diag, dtype=complex)
    off = np.asarray(off, dtype=complex)
    n = diag.size
    log_diag = _complex_log(diag)
    if lower:
        # X[i, j] = (Π_{j≤k<i} −e_k/d_{k+1}) / d_j
        ratios = -off / diag[1:]
    else:
        # X[i, j] = (Π_{i≤k<j} −f_k/d_k) / d_j
        ratios = -off / diag[:-1]
    cumulative = np.concatenate([[0.0], np.cumsum(_complex_log(ratios))])

    real_c, real_d = cumulative.real, log_diag.real
    if lower:
        log_max = np.max(real_c + np.maximum.accumulate(-real_c - real_d))
        log_x = cumulative[:, None] - cumulative[None, :] - log_diag[None, :]
        outside = np.arange(n)[:, None] < np.arange(n)[None, :]
    else:
        log_max = np.max(real_c - real_d + np.maximum.accumulate(-real_c))
        log_x = cumulative[None, :] - cumulative[:, None] - log_diag[None, :]
        outside = np.arange(n)[:, None] > np.arange(n)[None, :]
    log_x -= log_max
    log_x[outside] = -np.inf
    np.exp(log_x, out=log_x)
    return log_x, float(log_max)


def _inverse_gram(dim: int, blocks: List[Block]) -> Tuple[np.ndarray, float]:
    """Monta ρ̃ bloco a bloco a partir de inversas escaladas; devolve (ρ normalizada, ln traço bruto)."""
    global_max = max(log_max for _, _, log_max in blocks)
    matrix = np.zeros((dim, dim), dtype=complex)
    for indices, scaled, log_max in blocks:
        x = scaled * np.exp(log_max - global_max)
        matrix[np.ix_(indices, indices)] = x @ x.conj().T
    trace = float(np.real(np.trace(matrix)))
    if not np.isfinite(trace) or trace <= 0:
        raise IllConditionedError(f"Traço não positivo na inversa de Gram: {trace}")
    matrix /= trace
    matrix = (matrix + matrix.conj().T) / 2
    return matrix, 2 * global_max + np.log(trace)


def _condition_log10(generator: np.ndarray, log_inverse_max: float) -> float:
    # κ(A†A) ≈ (‖A‖·‖A⁻¹‖)², com ‖A⁻¹‖ ~ max|A⁻¹_ij|
    norm = np.abs(generator).sum(axis=1).max()
    return float(2 * (np.log10(norm) + log_inverse_max / np.log(10)))


def stationarity_residual(generator: np.ndarray, matrix: np.ndarray) -> float:
    """
    Resíduo relativo ‖D(A)ρ‖ / (‖A‖²‖ρ‖) usando A esparsa.

    Args:
        generator: Operador de salto A
        matrix: Matriz densidade

    Returns:
        Resíduo relativo na norma de Frobenius
    """
    jump = scipy.sparse.csr_matrix(generator)
    left = jump @ matrix
    sandwich = jump @ left.conj().T
    gram_rho = jump.conj().T @ left
    residual = sandwich - 0.5 * (gram_rho + gram_rho.conj().T)
    scale = scipy.sparse.linalg.norm(jump) ** 2 * np.linalg.norm(matrix)
    return float(np.linalg.norm(residual) / scale)


def _metadata(params: ModelParams, **extra) -> dict:
    info = {
        'model': params.model.value,
        'parameter_name': params.parameter_name,
        'parameter': params.parameter,
    }
    info.update(extra)
    return info


def _dark_state(params: ModelParams, vector: np.ndarray) -> DensityMatrix:
    generator = params.jump_operator()
    residual = float(np.linalg.norm(scipy.sparse.csr_matrix(generator) @ vector))
    tol = current_settings().dark_state_residual_tol * max(1.0, params.n_particles)
    if residual > tol:
        raise IllConditionedError(
            f"Estado escuro com resíduo {residual:.3e} para {params.label()}"
        )
    return DensityMatrix.from_pure(
        params.basis, vector, 'dark-state',
        log_raw_trace=float('inf'),
        generator=generator,
        metadata=_metadata(params, residual=residual),
    )


def sdm_dark_state_even(params: ModelParams) -> np.ndarray:
    """
    Estado escuro (Ŝx − iζŜy)|D_ζ⟩ = 0 para N par.

    Na base de Ŝz o operador acopla apenas m ± 1, e a cadeia de índices pares
    obedece a recursão de dois termos
    v[2k+2] = −(b·L[2k+1])/(a·L[2k+2])·v[2k], com a = (1+ζ)/2, b = (1−ζ)/2;
    a cadeia ímpar é nula. A recursão é feita em log com sinal alternado.

    Args:
        params: Parâmetros SDM com N par e ζ ∈ (0, 1]

    Returns:
        Vetor normalizado de tamanho N + 1
    """
    _check_sdm(params)
    validate_parity(params.n_particles, 'even')
    basis = params.basis
    elements = ladder_elements(basis)
    a, b = (1 + params.zeta) / 2, (1 - params.zeta) / 2

    with np.errstate(divide='ignore'):
        steps = np.log(b * elements[1:-1:2]) - np.log(a * elements[2::2])
    log_moduli = np.concatenate([[0.0], np.cumsum(steps)])
    signs = np.where(np.arange(log_moduli.size) % 2 == 0, 1.0, -1.0)

    vector = np.zeros(basis.dim, dtype=complex)
    vector[0::2] = signs * np.exp(log_moduli - log_moduli.max())
    return vector / np.linalg.norm(vector)


def sdm_steady_state_odd(params: ModelParams) -> DensityMatrix:
    """
    Estado estacionário misto do SDM para N ímpar, ρ ∝ [(Ŝx+iζŜy)(Ŝx−iζŜy)]⁻¹.

    Na base separada por paridade A = [[0, A_eo], [A_oe, 0]] com A_eo
    bidiagonal inferior e A_oe bidiagonal superior, de modo que ρ é
    bloco-diagonal: bloco par A_oe⁻¹A_oe⁻†, bloco ímpar A_eo⁻¹A_eo⁻†.

    Args:
        params: Parâmetros SDM com N ímpar e ζ ∈ (0, 1]

    Returns:
        DensityMatrix normalizada com gerador A e ln do traço bruto
    """
    _check_sdm(params)
    validate_parity(params.n_particles, 'odd')
    basis = params.basis
    if params.zeta == 1.0:
        return _dark_state(params, basis.south_pole())

    elements = ladder_elements(basis)
    a, b = (1 + params.zeta) / 2, (1 - params.zeta) / 2
    dim = basis.dim
    even, odd = np.arange(0, dim, 2), np.arange(1, dim, 2)

    odd_block, odd_max = bidiagonal_inverse_scaled(
        a * elements[1::2], b * elements[2::2], lower=True
    )
    even_block, even_max = bidiagonal_inverse_scaled(
        b * elements[1::2], a * elements[2::2], lower=False
    )
    matrix, log_raw_trace = _inverse_gram(dim, [(even, even_block, even_max), (odd, odd_block, odd_max)])
    return _resolvent_state(params, matrix, log_raw_trace, max(even_max, odd_max))


def crf_steady_state(params: ModelParams) -> DensityMatrix:
    """
    Estado estacionário da superradiância com drive, ρ ∝ [(Ŝ⁺ − iNΥ/2)(Ŝ⁻ + iNΥ/2)]⁻¹.

    Args:
        params: Parâmetros CRF com Υ ≥ 0 (Υ = 0 devolve o polo sul)

    Returns:
        DensityMatrix normalizada
    """
    if params.model is not Model.CRF:
        raise DomainError(f"Esperado modelo CRF, recebido {params.model.value}")
    basis = params.basis
    if params.upsilon == 0.0:
        return _dark_state(params, basis.south_pole())

    diag = np.full(basis.dim, 0.5j * params.n_particles * params.upsilon)
    scaled, log_max = bidiagonal_inverse_scaled(diag, ladder_elements(basis)[1:], lower=False)
    matrix, log_raw_trace = _inverse_gram(basis.dim, [(np.arange(basis.dim), scaled, log_max)])
    return _resolvent_state(params, matrix, log_raw_trace, log_max)


def _resolvent_state(params: ModelParams, matrix: np.ndarray, log_raw_trace: float, log_inverse_max: float) -> DensityMatrix:
    generator = params.jump_operator()
    condition = _condition_log10(generator, log_inverse_max)
    if condition > current_settings().max_condition_log10:
        logger.warning("%s mal condicionado: log10 κ ≈ %.1f", params.label(), condition)
    residual = stationarity_residual(generator, matrix)
    logger.debug("%s: resíduo %.2e, log10 κ ≈ %.1f", params.label(), residual, condition)
    return DensityMatrix(
        params.basis, matrix, 'closed-form',
        log_raw_trace=float(log_raw_trace),
        generator=generator,
        metadata=_metadata(params, residual=residual, condition_log10=condition),
    )


def _check_sdm(params: ModelParams) -> None:
    if params.model is not Model.SDM:
        raise DomainError(f"Esperado modelo SDM, recebido {params.model.value}")
    if not 0.0 < params.zeta <= 1.0:
        raise DomainError(f"Solução fechada requer ζ ∈ (0, 1], recebido {params.zeta}")


def steady_state(params: ModelParams) -> DensityMatrix:
    """
    Estado estacionário exato para qualquer ponto de parâmetro.

    SDM com N par → projetor do estado escuro; N ímpar → inversa de Gram;
    ζ < 0 → rotação exp(iπŜx) do estado com |ζ|; CRF → inversa de Gram.

    Args:
        params: Modelo e parâmetros

    Returns:
        DensityMatrix normalizada
    """
    if params.model is Model.CRF:
        return crf_steady_state(params)
    if params.zeta < 0:
        mirrored = steady_state(params.with_parameter(-params.zeta))
        rotated = rotate_about_x(mirrored, np.pi)
        metadata = dict(rotated.metadata, parameter=params.zeta)
        return dataclasses.replace(rotated, metadata=metadata)
    if params.n_particles % 2 == 0:
        return _dark_state(params, sdm_dark_state_even(params))
    return sdm_steady_state_odd(params)
