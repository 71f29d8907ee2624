"""Testes para a base de Dicke, operadores coletivos, estados coerentes e Husimi."""

import json
import tempfile
import unittest
from pathlib import Path

import numpy as np

from src.dicke import (
    DickeBasis,
    build_operators,
    coherent_state,
    expectation,
    expectation_many,
    husimi,
    husimi_integral,
    ladder_elements,
    rotate_about_x,
    spin_moments
)
from src.exceptions import DimensionMismatchError, DomainError, NonHermitianError
from src.solvers import DensityMatrix


def random_state(n_particles: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    dim = n_particles + 1
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


class TestDickeBasis(unittest.TestCase):
    """Testes para a base |S, m⟩."""

    def test_dimension_and_ordering(self):
        """Testa dimensão N+1 e m crescente."""
        basis = DickeBasis(5)
        self.assertEqual(basis.dim, 6)
        self.assertEqual(basis.spin, 2.5)
        np.testing.assert_array_equal(basis.m_values, [-2.5, -1.5, -0.5, 0.5, 1.5, 2.5])

    def test_index_of(self):
        """Testa índice de m e rejeição de m fora do setor."""
        basis = DickeBasis(4)
        self.assertEqual(basis.index_of(-2), 0)
        self.assertEqual(basis.index_of(2), 4)
        with self.assertRaises(DomainError):
            basis.index_of(0.5)
        with self.assertRaises(DomainError):
            basis.index_of(3)

    def test_poles(self):
        """Testa os polos sul e norte."""
        basis = DickeBasis(3)
        self.assertEqual(basis.south_pole()[0], 1.0)
        self.assertEqual(basis.north_pole()[-1], 1.0)

    def test_invalid_n(self):
        """Testa N inválido."""
        with self.assertRaises(DomainError):
            DickeBasis(0)


class TestOperators(unittest.TestCase):
    """Testes para os operadores coletivos."""

    def setUp(self):
        self.basis = DickeBasis(6)
        self.ops = build_operators(self.basis)

    def test_ladder_elements(self):
        """Testa ⟨−S|Ŝ⁻|−S+1⟩ = √N e L[0] = 0."""
        elements = ladder_elements(self.basis)
        self.assertEqual(elements[0], 0.0)
        self.assertAlmostEqual(elements[1], np.sqrt(6))
        self.assertAlmostEqual(elements[-1], np.sqrt(6))

    def test_commutation_relation(self):
        """Testa [Ŝx, Ŝy] = iŜz."""
        sx, sy, sz = (self.ops[name].matrix for name in ('Sx', 'Sy', 'Sz'))
        np.testing.assert_allclose(sx @ sy - sy @ sx, 1j * sz, atol=1e-12)

    def test_casimir(self):
        """Testa Ŝ² = S(S+1) no setor simétrico."""
        total = sum(self.ops[name].squared().matrix for name in ('Sx', 'Sy', 'Sz'))
        np.testing.assert_allclose(total, 12.0 * np.eye(7), atol=1e-12)

    def test_lowering_acts_downwards(self):
        """Testa Ŝ⁻|m⟩ ∝ |m − 1⟩."""
        lowered = self.ops['Sminus'].matrix @ self.basis.basis_vector(1)
        self.assertAlmostEqual(abs(lowered[self.basis.index_of(0)]), np.sqrt(12 - 0))
        self.assertAlmostEqual(np.linalg.norm(lowered), np.sqrt(12))

    def test_operator_algebra(self):
        """Testa composição, adjunto e dimensão incompatível."""
        sminus, splus = self.ops['Sminus'], self.ops['Splus']
        np.testing.assert_allclose(sminus.dagger().matrix, splus.matrix)
        sx = (sminus + splus).scaled(0.5)
        np.testing.assert_allclose(sx.matrix, self.ops['Sx'].matrix)
        other = build_operators(DickeBasis(3))['Sx']
        with self.assertRaises(DimensionMismatchError):
            sminus @ other

    def test_spin_moments_match_dense_expectations(self):
        """Testa momentos tridiagonais contra Tr(ρA) denso."""
        rho = random_state(6)
        moments = spin_moments(self.basis, rho)
        dense = expectation_many(rho, {
            'Sx': self.ops['Sx'], 'Sy': self.ops['Sy'], 'Sz': self.ops['Sz'],
            'Sx2': self.ops['Sx'].squared(),
        })
        for name, value in dense.items():
            self.assertAlmostEqual(moments[name], value.real, places=12)

    def test_expectation_dimension_check(self):
        """Testa estado com dimensão errada."""
        with self.assertRaises(DimensionMismatchError):
            expectation(self.ops['Sz'], np.eye(3) / 3)

    def test_rotation_maps_south_to_north(self):
        """Testa exp(iπŜx)|−S⟩ = |+S⟩ a menos de fase."""
        rho = DensityMatrix.from_pure(self.basis, self.basis.south_pole())
        rotated = rotate_about_x(rho, np.pi)
        self.assertAlmostEqual(rotated.matrix[-1, -1].real, 1.0, places=10)
        self.assertAlmostEqual(rotated.metadata['rotation_x'], np.pi)
        self.assertAlmostEqual(spin_moments(self.basis, rotated.matrix)['Sz'], 3.0, places=10)


class TestCoherentState(unittest.TestCase):
    """Testes para estados coerentes de spin."""

    def test_bloch_vector(self):
        """Testa ⟨S⃗⟩ = (N/2)(sinθ cosφ, sinθ sinφ, cosθ)."""
        basis = DickeBasis(8)
        state = coherent_state(basis, 1.1, 0.7)
        self.assertAlmostEqual(np.linalg.norm(state.amplitudes), 1.0)
        moments = spin_moments(basis, state.projector())
        np.testing.assert_allclose(
            [moments['Sx'], moments['Sy'], moments['Sz']], state.bloch_vector, atol=1e-12
        )
        # variância transversal de estado coerente: N/4
        self.assertAlmostEqual(moments['Sx2'] - moments['Sx'] ** 2,
                               2.0 * (1 - (np.sin(1.1) * np.cos(0.7)) ** 2), places=10)

    def test_north_pole(self):
        """Testa θ = 0 no polo norte."""
        basis = DickeBasis(5)
        state = coherent_state(basis, 0.0)
        self.assertAlmostEqual(abs(state.amplitudes[-1]), 1.0)

    def test_large_n_is_finite(self):
        """Testa binomiais em log para N grande."""
        state = coherent_state(DickeBasis(5000), np.pi / 2)
        self.assertTrue(np.all(np.isfinite(state.amplitudes)))
        self.assertAlmostEqual(np.linalg.norm(state.amplitudes), 1.0)

    def test_invalid_angles(self):
        """Testa ângulos fora do domínio."""
        basis = DickeBasis(3)
        with self.assertRaises(DomainError):
            coherent_state(basis, 4.0)
        with self.assertRaises(DomainError):
            coherent_state(basis, 1.0, 2 * np.pi)


class TestHusimi(unittest.TestCase):
    """Testes para a distribuição de Husimi."""

    def test_coherent_state_peak_and_normalization(self):
        """Testa pico na direção do estado e ∫Q dΩ = 1/(N+1)."""
        basis = DickeBasis(20)
        state = coherent_state(basis, np.pi / 3, np.pi / 2)
        grid = husimi(state.projector(), n_theta=181, n_phi=360)
        theta, phi, value = grid.peak
        self.assertAlmostEqual(theta, np.pi / 3, places=8)
        self.assertAlmostEqual(phi, np.pi / 2, places=8)
        self.assertAlmostEqual(value, 1 / (4 * np.pi), places=8)
        self.assertAlmostEqual(husimi_integral(grid) * 21, 1.0, places=3)

    def test_maximally_mixed_is_flat(self):
        """Testa Q constante para o estado maximamente misto."""
        basis = DickeBasis(7)
        grid = husimi(DensityMatrix.maximally_mixed(basis), n_theta=30, n_phi=20)
        np.testing.assert_allclose(grid.values, 1 / (4 * np.pi * 8), rtol=1e-10)
        self.assertAlmostEqual(grid.max_over_median, 1.0, places=8)

    def test_rejects_non_hermitian(self):
        """Testa rejeição de matriz não hermitiana."""
        with self.assertRaises(NonHermitianError):
            husimi(np.triu(np.ones((4, 4))), n_theta=10, n_phi=10)

    def test_csv_with_sidecar(self):
        """Testa CSV da grade e diagnósticos em JSON."""
        basis = DickeBasis(4)
        grid = husimi(coherent_state(basis, 2.0).projector(), n_theta=12, n_phi=8)
        with tempfile.TemporaryDirectory() as tmp:
            path = grid.to_csv(Path(tmp) / 'q.csv')
            lines = path.read_text().splitlines()
            self.assertEqual(lines[0], 'theta,phi,Q')
            self.assertEqual(len(lines), 1 + 12 * 8)
            diagnostics = json.loads(path.with_suffix('.json').read_text())
            self.assertEqual(diagnostics['n_particles'], 4)
            self.assertIn('max_over_median', diagnostics)


if __name__ == '__main__':
    unittest.main()
