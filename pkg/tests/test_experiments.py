"""Testes para varreduras, busca do ótimo, ajustes de escala, emissão e CLI."""

import json
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

import app
from src.analytics import crf_optimum, sdm_optimum
from src.exceptions import DomainError, NoMinimumError
from src.experiments import (
    GridSpec,
    OptimumRecord,
    SweepResult,
    apply_overrides,
    emit,
    emit_optimum,
    fit_scaling,
    load_config,
    load_fit_input,
    load_fit_points,
    odd_log_spaced,
    parse_config,
    run_sweep,
    run_verify,
    scan_optimum,
    sweep_tasks,
    sweep_to_frame
)
from src.experiments.scaling import _sdm_log_corrected
from src.solvers import Model

CONFIG_DIR = Path(__file__).resolve().parents[1] / 'data' / 'configs'


def small_sdm_config(**extra):
    data = {
        'model': 'sdm',
        'n_values': [6],
        'grid': {'parameter': 'zeta', 'spacing': 'linear', 'start': 0.2, 'stop': 0.6, 'num': 3},
        'analytics': ['sdm_even', 'sdm_odd', 'sdm_linearized'],
    }
    data.update(extra)
    return parse_config(data)


class TestGridSpec(unittest.TestCase):
    """Testes para a grade de parâmetros."""

    def test_parse(self):
        """Testa a forma compacta da CLI."""
        grid = GridSpec.parse('zeta=log:1e-4:1:41')
        self.assertEqual(grid.num, 41)
        self.assertAlmostEqual(grid.coordinates()[0], 1e-4)
        self.assertAlmostEqual(grid.coordinates()[-1], 1.0)

    def test_parse_errors(self):
        """Testa texto mal formado e grade log com zero."""
        for text in ('zeta', 'zeta=log:1:2', 'zeta=log:0:1:5', 'kappa=linear:0:1:5', 'zeta=linear:1:1:3'):
            with self.subTest(text=text):
                with self.assertRaises(DomainError):
                    GridSpec.parse(text)

    def test_control_values(self):
        """Testa δΥ = 1 − Υ e η convertido por N."""
        delta = GridSpec.parse('delta_upsilon=linear:0.1:0.3:3')
        np.testing.assert_allclose(delta.control_values(100), [0.9, 0.8, 0.7])
        eta = GridSpec.parse('eta=linear:-2:0:3')
        values = eta.control_values(1000)
        self.assertAlmostEqual(values[-1], 1.0)
        self.assertLess(values[0], 1.0)

    def test_non_finite_coordinates(self):
        """Testa grade com extremo infinito rejeitada ao gerar as coordenadas."""
        grid = GridSpec(parameter='upsilon', spacing='linear', start=0.1, stop=float('inf'), num=3)
        with self.assertRaises(DomainError):
            grid.coordinates()


class TestSweepConfig(unittest.TestCase):
    """Testes para a configuração de varreduras."""

    def test_validation_errors(self):
        """Testa parâmetro, variante, observável, tolerância e ζ fora da faixa."""
        grid_zeta = {'parameter': 'zeta', 'spacing': 'linear', 'start': 0.1, 'stop': 0.5, 'num': 3}
        grid_upsilon = {'parameter': 'upsilon', 'spacing': 'linear', 'start': 0.1, 'stop': 0.5, 'num': 3}
        invalid = [
            {'model': 'sdm', 'n_values': [10], 'grid': grid_upsilon},
            {'model': 'crf', 'n_values': [10], 'grid': grid_upsilon, 'analytics': ['sdm_even']},
            {'model': 'sdm', 'n_values': [10], 'grid': grid_zeta, 'observables': ['sw']},
            {'model': 'sdm', 'n_values': [10], 'grid': grid_zeta, 'tolerances': {'inexistente': 1.0}},
            {'model': 'sdm', 'n_values': [10], 'grid': dict(grid_zeta, stop=1.5)},
            {'model': 'sdm', 'n_values': [0], 'grid': grid_zeta},
            {'model': 'sdm', 'n_values': [10], 'grid': grid_zeta, 'schema_version': 2},
        ]
        for data in invalid:
            with self.subTest(data=data):
                with self.assertRaises(DomainError):
                    parse_config(data)

    def test_particle_numbers(self):
        """Testa pares (N, N+1) padrão no SDM e ausentes na CRF."""
        self.assertEqual(small_sdm_config(n_values=[1000]).particle_numbers(), [1000, 1001])
        self.assertEqual(
            small_sdm_config(n_values=[1000], include_parity_partner=False).particle_numbers(), [1000]
        )
        crf = parse_config({
            'model': 'crf', 'n_values': [100],
            'grid': {'parameter': 'upsilon', 'spacing': 'linear', 'start': 0.1, 'stop': 0.5, 'num': 3},
        })
        self.assertEqual(crf.particle_numbers(), [100])

    def test_overrides(self):
        """Testa flags sobrescrevendo o arquivo e fusão das tolerâncias."""
        config = small_sdm_config(tolerances={'quadrature_rtol': 1e-9})
        updated = apply_overrides(config, n_values=[8], tolerances={'positivity_tol': 1e-9}, workers=None)
        self.assertEqual(updated.n_values, [8])
        self.assertEqual(updated.tolerances, {'quadrature_rtol': 1e-9, 'positivity_tol': 1e-9})
        self.assertIs(apply_overrides(config, model=None), config)

    def test_shipped_configs(self):
        """Testa que os YAML de exemplo são válidos."""
        paths = sorted(CONFIG_DIR.glob('*.yaml'))
        self.assertTrue(paths)
        for path in paths:
            with self.subTest(path=path.name):
                self.assertEqual(load_config(path).schema_version, 1)

    def test_missing_file(self):
        """Testa arquivo inexistente."""
        with self.assertRaises(DomainError):
            load_config('/caminho/que/nao/existe.yaml')


class TestSweep(unittest.TestCase):
    """Testes para a execução de varreduras."""

    def test_tasks_order(self):
        """Testa índices determinísticos com N e N+1."""
        tasks = sweep_tasks(small_sdm_config())
        self.assertEqual([index for index, _, _, _ in tasks], list(range(6)))
        self.assertEqual([n for _, n, _, _ in tasks], [6, 6, 6, 7, 7, 7])
        np.testing.assert_allclose([value for _, _, value, _ in tasks][:3], [0.2, 0.4, 0.6])

    def test_run_sweep(self):
        """Testa resultados numéricos, variantes aplicáveis e flags."""
        result = run_sweep(small_sdm_config())
        self.assertEqual(len(result.points), 6)
        self.assertEqual(result.failures, [])
        even, odd = result.points[0], result.points[3]
        self.assertIn('sdm_even', even.analytics)
        self.assertNotIn('sdm_odd', even.analytics)
        self.assertIn('sdm_odd: não se aplica', even.flags)
        self.assertIn('sdm_odd', odd.analytics)
        self.assertAlmostEqual(even.numeric.purity, 1.0)
        self.assertLess(odd.numeric.purity, 1.0)

    def test_crf_sweep_with_eta(self):
        """Testa coordenada η guardada em grid_value e Υ em parameter."""
        config = parse_config({
            'model': 'crf', 'n_values': [20],
            'grid': {'parameter': 'eta', 'spacing': 'linear', 'start': -2.0, 'stop': -1.0, 'num': 2},
            'analytics': ['crf_critical', 'crf_above_threshold'],
        })
        result = run_sweep(config)
        point = result.points[0]
        self.assertEqual(point.grid_value, -2.0)
        self.assertEqual(point.parameter_name, 'upsilon')
        self.assertLess(point.parameter, 1.0)
        self.assertIn('crf_critical', point.analytics)
        self.assertIn('crf_above_threshold: não se aplica', point.flags)

    def test_eta_grid_crossing_negative_upsilon(self):
        """Testa ponto com Υ < 0 registrado como erro sem interromper a varredura."""
        config = parse_config({
            'model': 'crf', 'n_values': [100],
            'grid': {'parameter': 'eta', 'spacing': 'linear', 'start': -20.0, 'stop': -1.0, 'num': 3},
            'analytics': ['crf_critical'],
        })
        result = run_sweep(config)
        self.assertEqual(len(result.points), 3)
        bad = result.points[0]
        self.assertLess(bad.parameter, 0.0)
        self.assertEqual(bad.grid_value, -20.0)
        self.assertEqual(bad.parameter_name, 'upsilon')
        self.assertTrue(bad.error.startswith('DomainError'))
        self.assertIsNone(bad.numeric)
        self.assertEqual(result.failures, [bad])
        for point in result.points[1:]:
            self.assertTrue(point.ok)
            self.assertIsNotNone(point.numeric)

    def test_worker_count_does_not_change_output(self):
        """Testa CSV byte a byte idêntico com 1 e 2 workers."""
        with tempfile.TemporaryDirectory() as tmp:
            single = emit(run_sweep(small_sdm_config(workers=1)), Path(tmp) / 'um')[0]
            pooled = emit(run_sweep(small_sdm_config(workers=2)), Path(tmp) / 'dois')[0]
            self.assertEqual(single.read_bytes(), pooled.read_bytes())

    def test_long_table(self):
        """Testa linha numérica por ponto e linhas analíticas presentes."""
        config = small_sdm_config(observables=['sz', 'xi2'])
        frame = sweep_to_frame(run_sweep(config))
        self.assertEqual(
            list(frame.columns),
            ['index', 'n_particles', 'parameter_name', 'parameter', 'grid_value', 'source',
             'sz', 'xi2', 'flags', 'error']
        )
        self.assertEqual((frame['source'] == 'numeric').sum(), 6)
        self.assertEqual((frame['source'] == 'sdm_even').sum(), 3)
        self.assertEqual((frame['source'] == 'sdm_odd').sum(), 3)

    def test_json_round_trip(self):
        """Testa SweepResult serializado e relido."""
        result = run_sweep(small_sdm_config(format='json'))
        with tempfile.TemporaryDirectory() as tmp:
            path = emit(result, tmp, 'json')[0]
            loaded = SweepResult.model_validate_json(path.read_text())
        self.assertEqual(len(loaded.points), 6)
        self.assertAlmostEqual(loaded.points[4].numeric.xi2, result.points[4].numeric.xi2)
        self.assertEqual(loaded.config.model, Model.SDM)

    def test_unknown_format(self):
        """Testa formato de saída desconhecido."""
        with self.assertRaises(DomainError):
            emit(run_sweep(small_sdm_config(n_values=[2], include_parity_partner=False)), '.', 'xml')


class TestOptimum(unittest.TestCase):
    """Testes para a busca numérica do ótimo."""

    def test_sdm_optimum_matches_formula(self):
        """Testa ζ_min e ξ²_min numéricos contra W₋₁ para N = 101."""
        record = scan_optimum(Model.SDM, 101)
        expected = sdm_optimum(101)
        self.assertEqual(record.parameter_name, 'zeta')
        self.assertLess(abs(record.param_min / expected['zeta_min'] - 1), 0.15)
        self.assertLess(abs(record.xi2_min_numeric / expected['xi2_min'] - 1), 0.15)
        self.assertAlmostEqual(record.param_min_analytic, expected['zeta_min'])
        self.assertGreater(record.evaluations, 25)

    def test_minimum_on_edge(self):
        """Testa intervalo sem mínimo interior."""
        with self.assertRaises(NoMinimumError):
            scan_optimum(Model.SDM, 101, bracket=(0.2, 0.9))
        with self.assertRaises(NoMinimumError):
            scan_optimum(Model.SDM, 101, bracket=(0.5, 0.1))
        with self.assertRaises(NoMinimumError):
            scan_optimum(Model.SDM, 101, grid_points=2)


class TestScaling(unittest.TestCase):
    """Testes para os ajustes de escala."""

    def test_power_law(self):
        """Testa a·N^b exato."""
        n = np.array([11, 31, 101, 301, 1001])
        fit = fit_scaling(list(zip(n, 2 * n ** -0.7)))
        self.assertAlmostEqual(fit.exponent, -0.7, places=10)
        self.assertAlmostEqual(fit.coefficients['a'], 2.0, places=8)
        self.assertEqual(fit.n_window, (11, 1001))

    def test_log_corrected(self):
        """Testa recuperação de (a, b) na forma com correção logarítmica do SDM."""
        n = np.array(odd_log_spaced(11, 2001, 12), dtype=float)
        xi2 = np.exp(_sdm_log_corrected(n, 0.6, 3.0))
        fit = fit_scaling(list(zip(n, xi2)), 'log-corrected', Model.SDM)
        self.assertAlmostEqual(fit.coefficients['a'], 0.6, delta=0.01)
        self.assertAlmostEqual(fit.coefficients['b'], 3.0, delta=0.05)
        self.assertLess(fit.residual, 1e-4)
        self.assertIsNone(fit.exponent)

    def test_log_corrected_is_lambert_optimum(self):
        """Testa a forma SDM com (a, b) = (1, 8/π) reproduzindo o ξ²_min de sdm_optimum."""
        n = np.array(odd_log_spaced(11, 2001, 10), dtype=float)
        expected = np.array([sdm_optimum(int(value))['xi2_min'] for value in n])
        np.testing.assert_allclose(np.exp(_sdm_log_corrected(n, 1.0, 8 / np.pi)), expected, rtol=1e-9)
        fit = fit_scaling(list(zip(n, expected)), 'log-corrected', Model.SDM)
        self.assertAlmostEqual(fit.coefficients['a'], 1.0, delta=1e-4)
        self.assertAlmostEqual(fit.coefficients['b'], 8 / np.pi, delta=1e-3)
        self.assertLess(fit.residual, fit_scaling(list(zip(n, expected))).residual)

    def test_errors(self):
        """Testa poucos pontos, família desconhecida, modelo ausente e ξ² não positivo."""
        points = [(11, 0.3), (31, 0.2), (101, 0.1), (301, 0.05)]
        with self.assertRaises(DomainError):
            fit_scaling(points[:3])
        with self.assertRaises(DomainError):
            fit_scaling(points, 'exponencial')
        with self.assertRaises(DomainError):
            fit_scaling(points, 'log-corrected')
        with self.assertRaises(DomainError):
            fit_scaling(points[:3] + [(301, -0.05)])

    def test_odd_log_spaced(self):
        """Testa N ímpares, ordenados e dentro da janela."""
        values = odd_log_spaced(11, 1001, 10)
        self.assertTrue(all(n % 2 == 1 for n in values))
        self.assertEqual(values, sorted(set(values)))
        self.assertEqual(values[0], 11)
        self.assertEqual(values[-1], 1001)
        with self.assertRaises(DomainError):
            odd_log_spaced(10, 5, 3)


@pytest.mark.slow
class TestOptimumScaling(unittest.TestCase):
    """Testes lentos do ótimo numérico em N grande."""

    def test_effective_exponent(self):
        """Testa expoente efetivo ≈ −0.9 para N ímpar e resíduo menor da forma com W₋₁."""
        records = [scan_optimum(Model.SDM, n, grid_points=15, xtol=1e-3)
                   for n in odd_log_spaced(101, 4001, 6)]
        points = [(record.n_particles, record.xi2_min_numeric) for record in records]
        power = fit_scaling(points)
        corrected = fit_scaling(points, 'log-corrected', Model.SDM)
        self.assertGreaterEqual(power.exponent, -0.95)
        self.assertLessEqual(power.exponent, -0.85)
        self.assertLess(corrected.residual, power.residual)

    def test_crf_optimum_against_scan(self):
        """Testa o mínimo numérico do CRF em N = 4000 contra a previsão com W₋₁."""
        record = scan_optimum(Model.CRF, 4000, grid_points=15, xtol=1e-3)
        expected = crf_optimum(4000)
        self.assertEqual(record.parameter_name, 'delta_upsilon')
        self.assertLess(abs(record.xi2_min_numeric / expected['xi2_min'] - 1), 0.15)
        self.assertLess(abs(np.log(record.param_min / record.param_min_analytic)), np.log(1.5))


class TestFitInput(unittest.TestCase):
    """Testes para a leitura de pontos do ajuste."""

    def test_csv_columns(self):
        """Testa as duas convenções de colunas e colunas ausentes."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'pontos.csv'
            pd.DataFrame({'N': [11, 31], 'xi2_min': [0.3, 0.2]}).to_csv(path, index=False)
            self.assertEqual(load_fit_points(path), [(11.0, 0.3), (31.0, 0.2)])
            pd.DataFrame({'n': [11], 'xi2': [0.3]}).to_csv(path, index=False)
            with self.assertRaises(DomainError):
                load_fit_points(path)

    def test_optimum_json(self):
        """Testa o JSON emitido por scan-optimum."""
        records = [
            OptimumRecord(model='sdm', n_particles=n, parameter_name='zeta',
                          param_min=3.7 / n, xi2_min_numeric=4.0 / n)
            for n in (21, 51)
        ]
        with tempfile.TemporaryDirectory() as tmp:
            path = emit_optimum(records, tmp, 'json')
            self.assertEqual(json.loads(path.read_text())[0]['n_particles'], 21)
            self.assertEqual(load_fit_points(path), [(21, 4.0 / 21), (51, 4.0 / 51)])
            self.assertEqual(load_fit_input(path)[1], 'sdm')

    def test_model_column(self):
        """Testa o modelo lido da coluna model e a recusa de modelos misturados."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'pontos.csv'
            pd.DataFrame({'N': [11, 31], 'xi2_min': [0.3, 0.2]}).to_csv(path, index=False)
            self.assertIsNone(load_fit_input(path)[1])
            pd.DataFrame({'model': ['crf', 'crf'], 'n_particles': [10, 20],
                          'xi2_min_numeric': [0.3, 0.2]}).to_csv(path, index=False)
            self.assertEqual(load_fit_input(path), ([(10.0, 0.3), (20.0, 0.2)], 'crf'))
            pd.DataFrame({'model': ['crf', 'sdm'], 'N': [10, 21],
                          'xi2_min': [0.3, 0.2]}).to_csv(path, index=False)
            with self.assertRaises(DomainError):
                load_fit_input(path)


class TestVerify(unittest.TestCase):
    """Testes para a suíte de equivalência com o oráculo."""

    def test_small_suite(self):
        """Testa aprovação e resumo por modelo."""
        report = run_verify(n_values=(2, 3, 4), points_per_model=3, seed=1)
        self.assertTrue(report.passed)
        summary = report.summary()
        self.assertEqual(set(summary), {'sdm', 'crf'})
        self.assertEqual(summary['sdm']['points'], 9)
        self.assertEqual(summary['crf']['failures'], 0)
        self.assertLess(summary['crf']['max_deviation'], 1e-8)

    def test_seed_is_reproducible(self):
        """Testa mesmos parâmetros para a mesma semente."""
        first = run_verify(n_values=(3,), points_per_model=2, seed=7)
        second = run_verify(n_values=(3,), points_per_model=2, seed=7)
        self.assertEqual([c.parameter for c in first.checks], [c.parameter for c in second.checks])


class TestCli(unittest.TestCase):
    """Testes para a interface de linha de comando."""

    def test_verify(self):
        """Testa verify com código de saída 0."""
        self.assertEqual(app.main(['-q', 'verify', '--n-max', '3', '--points', '2']), 0)

    def test_sweep_from_flags(self):
        """Testa sweep sem arquivo de configuração."""
        with tempfile.TemporaryDirectory() as tmp:
            code = app.main(['-q', 'sweep', '--model', 'sdm', '--n', '4',
                             '--param-grid', 'zeta=linear:0.2:0.6:3', '--out', tmp])
            self.assertEqual(code, 0)
            frame = pd.read_csv(Path(tmp) / 'sweep.csv')
            self.assertEqual(sorted(frame['n_particles'].unique()), [4, 5])

    def test_sweep_from_config_with_override(self):
        """Testa --config com --n, --format e --tolerance sobrescrevendo o arquivo."""
        with tempfile.TemporaryDirectory() as tmp:
            code = app.main(['-q', 'sweep', '--config', str(CONFIG_DIR / 'sdm_parity_sweep.yaml'),
                             '--n', '4', '--param-grid', 'zeta=log:0.1:1:2', '--format', 'json',
                             '--tolerance', 'positivity_tol=1e-9', '--out', tmp])
            self.assertEqual(code, 0)
            result = SweepResult.model_validate_json((Path(tmp) / 'sweep.json').read_text())
            self.assertEqual(result.config.n_values, [4])
            self.assertEqual(result.config.tolerances['positivity_tol'], 1e-9)

    def test_sweep_missing_flags(self):
        """Testa erro de domínio (código 2) sem --config nem --param-grid."""
        self.assertEqual(app.main(['-q', 'sweep', '--model', 'sdm', '--n', '4']), 2)

    def test_malformed_tolerance(self):
        """Testa --tolerance sem '='."""
        self.assertEqual(app.main(['-q', 'verify', '--n-max', '2', '--tolerance', 'positivity_tol']), 2)

    def test_argparse_errors(self):
        """Testa argumentos obrigatórios ausentes."""
        with self.assertRaises(SystemExit) as context:
            app.main(['husimi', '--model', 'sdm'])
        self.assertEqual(context.exception.code, 2)

    def test_husimi(self):
        """Testa husimi com CSV e diagnósticos gravados."""
        with tempfile.TemporaryDirectory() as tmp:
            code = app.main(['-q', 'husimi', '--model', 'crf', '--n', '10', '--param', '0.5',
                             '--n-theta', '20', '--n-phi', '40', '--out', tmp])
            self.assertEqual(code, 0)
            self.assertTrue((Path(tmp) / 'husimi_crf_N10_0.5.csv').exists())

    def test_scan_and_fit(self):
        """Testa scan-optimum e fit encadeados pelo JSON de ótimos."""
        with tempfile.TemporaryDirectory() as tmp:
            code = app.main(['-q', 'scan-optimum', '--model', 'sdm', '--n', '21', '--out', tmp,
                             '--format', 'json'])
            self.assertEqual(code, 0)
            records = json.loads((Path(tmp) / 'optimum.json').read_text())
            self.assertEqual(records[0]['n_particles'], 21)

            n = np.array(odd_log_spaced(11, 1001, 8), dtype=float)
            points = Path(tmp) / 'pontos.csv'
            pd.DataFrame({'N': n, 'xi2_min': np.exp(_sdm_log_corrected(n, 0.5, 8 / np.pi))}).to_csv(
                points, index=False
            )
            self.assertEqual(app.main(['-q', 'fit', '--input', str(points), '--model', 'sdm', '--out', tmp]), 0)
            fits = pd.read_csv(Path(tmp) / 'fit.csv')
            self.assertEqual(list(fits['family']), ['power', 'log-corrected'])

    def test_fit_default_without_model(self):
        """Testa fit sem --model sobre CSV sem coluna model: só a lei de potência."""
        with tempfile.TemporaryDirectory() as tmp:
            n = np.array(odd_log_spaced(11, 1001, 6), dtype=float)
            points = Path(tmp) / 'pontos.csv'
            pd.DataFrame({'N': n, 'xi2_min': 2 * n ** -0.9}).to_csv(points, index=False)
            self.assertEqual(app.main(['-q', 'fit', '--input', str(points), '--out', tmp]), 0)
            fits = pd.read_csv(Path(tmp) / 'fit.csv')
            self.assertEqual(list(fits['family']), ['power'])
            self.assertAlmostEqual(fits['b'].iloc[0], -0.9, places=6)

    def test_fit_model_from_optimum_json(self):
        """Testa fit sem --model lendo o modelo do JSON de scan-optimum."""
        records = [
            OptimumRecord(model='sdm', n_particles=n, parameter_name='zeta',
                          param_min=sdm_optimum(n)['zeta_min'], xi2_min_numeric=sdm_optimum(n)['xi2_min'])
            for n in (21, 51, 101, 201, 401)
        ]
        with tempfile.TemporaryDirectory() as tmp:
            path = emit_optimum(records, tmp, 'json')
            self.assertEqual(app.main(['-q', 'fit', '--input', str(path), '--out', tmp]), 0)
            fits = pd.read_csv(Path(tmp) / 'fit.csv')
            self.assertEqual(list(fits['family']), ['power', 'log-corrected'])
            self.assertEqual(list(fits['model']), ['sdm', 'sdm'])

    def test_fit_log_corrected_requires_model(self):
        """Testa --family log-corrected explícito sem modelo conhecido (código 2)."""
        with tempfile.TemporaryDirectory() as tmp:
            points = Path(tmp) / 'pontos.csv'
            pd.DataFrame({'N': [11, 31, 101, 301], 'xi2_min': [0.3, 0.2, 0.1, 0.05]}).to_csv(points, index=False)
            code = app.main(['-q', 'fit', '--input', str(points), '--family', 'log-corrected', '--out', tmp])
            self.assertEqual(code, 2)


def test_sweep_records_out_of_domain_point(tmp_path, capsys):
    """Testa sweep com η levando a Υ < 0: ponto com erro, demais gravados, código 1."""
    code = app.main(['-q', 'sweep', '--model', 'crf', '--n', '100',
                     '--param-grid', 'eta=linear:-20:-1:3', '--out', str(tmp_path)])
    assert code == 1
    assert '3 pontos, 1 falha(s) (33.33%)' in capsys.readouterr().out
    frame = pd.read_csv(tmp_path / 'sweep.csv')
    numeric = frame[frame['source'] == 'numeric'].set_index('index')
    assert numeric.loc[0, 'error'].startswith('DomainError')
    assert numeric.loc[[1, 2], 'error'].isna().all()
    assert numeric.loc[[1, 2], 'xi2'].notna().all()


def test_scan_optimum_failure_exit_code(mocker, tmp_path):
    """Testa código 1 quando nenhum N tem mínimo interior."""
    mocker.patch('app.scan_optimum', side_effect=NoMinimumError('sem mínimo interior'))
    assert app.main(['-q', 'scan-optimum', '--model', 'crf', '--n', '50', '--out', str(tmp_path)]) == 1
    assert not (tmp_path / 'optimum.csv').exists()


@pytest.mark.parametrize('bad', ['1,a', 'x'])
def test_int_list_rejects_garbage(bad):
    """Testa a conversão de listas de N."""
    with pytest.raises(SystemExit):
        app.main(['sweep', '--n', bad])


if __name__ == '__main__':
    unittest.main()
