"""Testes para validadores, formatadores e configuração."""

import os
import unittest
from unittest import mock

import numpy as np

from src.config import Settings, current_settings, override_settings
from src.exceptions import DomainError, NonHermitianError
from src.utils import (
    format_float,
    format_percent,
    format_table,
    validate_hermitian,
    validate_monotone_grid,
    validate_parity,
    validate_particle_number,
    validate_range
)


class TestValidators(unittest.TestCase):
    """Testes para validadores de parâmetros."""

    def test_particle_number_accepts_integral_values(self):
        """Testa N inteiro e float com valor inteiro."""
        self.assertEqual(validate_particle_number(10), 10)
        self.assertEqual(validate_particle_number(np.int64(7)), 7)
        self.assertEqual(validate_particle_number(4.0), 4)

    def test_particle_number_rejects_invalid(self):
        """Testa rejeição de N nulo, negativo, fracionário e booleano."""
        for value in (0, -3, 2.5, True, 'dez'):
            with self.assertRaises(DomainError):
                validate_particle_number(value)

    def test_parity(self):
        """Testa validação de paridade."""
        validate_parity(10, 'even')
        validate_parity(11, 'odd')
        with self.assertRaises(DomainError):
            validate_parity(10, 'odd')

    def test_range_bounds(self):
        """Testa limites abertos e fechados."""
        self.assertEqual(validate_range(1.0, 'zeta', 0.0, 1.0), 1.0)
        with self.assertRaises(DomainError):
            validate_range(0.0, 'zeta', 0.0, 1.0, include_low=False)
        with self.assertRaises(DomainError):
            validate_range(float('nan'), 'zeta')
        with self.assertRaises(ValueError):
            validate_range(2.0, 'zeta', high=1.0)

    def test_hermitian(self):
        """Testa detecção de matriz não hermitiana."""
        matrix = np.array([[1.0, 1j], [-1j, 2.0]])
        self.assertLess(validate_hermitian(matrix, 1e-12), 1e-12)
        with self.assertRaises(NonHermitianError) as context:
            validate_hermitian(np.array([[1.0, 1.0], [0.0, 1.0]]), 1e-9)
        self.assertGreater(context.exception.deviation, 0.1)

    def test_monotone_grid(self):
        """Testa grades monótonas e não monótonas."""
        np.testing.assert_array_equal(validate_monotone_grid([3, 2, 1]), [3.0, 2.0, 1.0])
        with self.assertRaises(DomainError):
            validate_monotone_grid([1, 2, 2])
        with self.assertRaises(DomainError):
            validate_monotone_grid([])


class TestFormatters(unittest.TestCase):
    """Testes para formatação de números."""

    def test_format_float_fixed_width(self):
        """Testa notação científica com precisão fixa."""
        self.assertEqual(format_float(0.0012345), '1.234500000000e-03')
        self.assertEqual(format_float(None), '')
        self.assertEqual(format_float(float('nan')), 'nan')

    def test_format_percent(self):
        """Testa formatação percentual."""
        self.assertEqual(format_percent(0.0125), '1.25%')

    def test_format_table(self):
        """Testa alinhamento da tabela de texto."""
        table = format_table(('N', 'xi2'), [(101, 0.05), (1001, 0.0075)])
        lines = table.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[1].startswith('-'))
        self.assertIn('0.0075', lines[3])


class TestSettings(unittest.TestCase):
    """Testes para as configurações globais."""

    def test_defaults(self):
        """Testa valores padrão das tolerâncias."""
        settings = Settings()
        self.assertEqual(settings.hermiticity_tol, 1e-9)
        self.assertEqual(settings.quadrature_rtol, 1e-10)
        self.assertEqual(settings.workers, 1)

    def test_from_env(self):
        """Testa leitura de variáveis DICKE_*."""
        with mock.patch.dict(os.environ, {'DICKE_LIOUVILLIAN_MAX_N': '20', 'DICKE_LOG_LEVEL': 'DEBUG'}):
            settings = Settings.from_env()
        self.assertEqual(settings.liouvillian_max_n, 20)
        self.assertEqual(settings.log_level, 'DEBUG')

    def test_override_is_scoped(self):
        """Testa que override_settings vale só dentro do bloco."""
        before = current_settings().quadrature_rtol
        with override_settings(quadrature_rtol=1e-6) as settings:
            self.assertEqual(settings.quadrature_rtol, 1e-6)
            self.assertEqual(current_settings().quadrature_rtol, 1e-6)
            with override_settings(workers=3):
                self.assertEqual(current_settings().quadrature_rtol, 1e-6)
                self.assertEqual(current_settings().workers, 3)
        self.assertEqual(current_settings().quadrature_rtol, before)


if __name__ == '__main__':
    unittest.main()
