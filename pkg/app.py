"""Aplicativo principal - Estados estacionários exatos de modelos de spin coletivos.

Interface de linha de comando integrando os módulos:
- sweep: varreduras de parâmetro (numérico vs analítico)
- scan-optimum: mínimo numérico de ξ² por N
- fit: ajuste de escala de ξ²_min(N)
- husimi: função Q de um estado estacionário
- verify: equivalência forma fechada vs Liouvilliano
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from src.config import current_settings, override_settings
from src.dicke import husimi
from src.exceptions import DickeError, DomainError, NoMinimumError
from src.experiments import (
    GridSpec,
    SweepConfig,
    apply_overrides,
    emit,
    emit_fit,
    emit_husimi,
    emit_optimum,
    fit_scaling,
    load_config,
    load_fit_input,
    parse_config,
    run_sweep,
    run_verify,
    scan_optimum
)
from src.solvers import Model, ModelParams, steady_state
from src.utils.formatters import format_float, format_percent, format_table

logger = logging.getLogger("dicke_steady")

DEFAULT_OUT = 'results'


# ============================================================================
# Conversão de argumentos
# ============================================================================

def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"lista de inteiros inválida: {text}") from exc


def _name_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(',') if item.strip()]


def _tolerances(pairs: Optional[Sequence[str]]) -> Dict[str, float]:
    result: Dict[str, float] = {}
    for pair in pairs or ():
        key, sep, value = pair.partition('=')
        if not sep:
            raise DomainError(f"--tolerance espera chave=valor, recebido '{pair}'")
        try:
            result[key.strip()] = float(value)
        except ValueError as exc:
            raise DomainError(f"Valor inválido em --tolerance {pair}") from exc
    return result


def _configure_logging(args: argparse.Namespace) -> None:
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = getattr(logging, current_settings().log_level.upper(), logging.INFO)
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


# ============================================================================
# Subcomandos
# ============================================================================

def cmd_sweep(args: argparse.Namespace) -> int:
    overrides = {
        'model': args.model,
        'n_values': args.n,
        'grid': GridSpec.parse(args.param_grid) if args.param_grid else None,
        'analytics': args.analytics,
        'output_dir': args.out,
        'format': args.format,
        'tolerances': _tolerances(args.tolerance) or None,
        'workers': args.workers,
    }
    if args.config:
        config = apply_overrides(load_config(args.config), **overrides)
    else:
        missing = [flag for flag, key in (('--model', 'model'), ('--n', 'n_values'), ('--param-grid', 'grid'))
                   if overrides[key] is None]
        if missing:
            raise DomainError(f"sem --config, são obrigatórios: {', '.join(missing)}")
        data = {key: value for key, value in overrides.items() if value is not None}
        data['grid'] = data['grid'].model_dump()
        config = parse_config(data, source='flags da CLI')

    result = run_sweep(config)
    paths = emit(result, config.output_dir, config.format)
    failed = len(result.failures) / len(result.points) if result.points else 0.0
    print(f"{len(result.points)} pontos, {len(result.failures)} falha(s) ({format_percent(failed)})")
    for path in paths:
        print(f"  {path}")
    return 0 if not result.failures else 1


def cmd_scan_optimum(args: argparse.Namespace) -> int:
    model = Model(args.model)
    records, failures = [], 0
    with override_settings(**_tolerances(args.tolerance)):
        for n in args.n:
            try:
                records.append(scan_optimum(model, n, tuple(args.bracket) if args.bracket else None,
                                            args.grid_points, args.xtol))
            except NoMinimumError as exc:
                logger.error("%s", exc)
                failures += 1
    if records:
        path = emit_optimum(records, args.out, args.format)
        print(format_table(
            ('N', 'param_min', 'xi2_numeric', 'param_analytic', 'xi2_analytic'),
            [(r.n_particles, r.param_min, r.xi2_min_numeric,
              format_float(r.param_min_analytic, 6), format_float(r.xi2_min_analytic, 6)) for r in records],
        ))
        print(f"  {path}")
    return 0 if failures == 0 else 1


def cmd_fit(args: argparse.Namespace) -> int:
    points, input_model = load_fit_input(args.input)
    model = args.model or input_model
    if args.family == 'both':
        families = ('power', 'log-corrected') if model else ('power',)
        if not model:
            logger.warning("Modelo desconhecido em %s: apenas a lei de potência (use --model)", args.input)
    else:
        families = (args.family,)
    fits = [fit_scaling(points, family, model) for family in families]
    path = emit_fit(fits, args.out, args.format)
    print(format_table(
        ('family', 'a', 'b', 'residual', 'N window'),
        [(fit.family, fit.coefficients['a'], fit.coefficients['b'], fit.residual,
          f"{fit.n_window[0]}-{fit.n_window[1]}") for fit in fits],
    ))
    print(f"  {path}")
    return 0


def cmd_husimi(args: argparse.Namespace) -> int:
    if len(args.n) != 1:
        raise DomainError("husimi aceita um único N")
    n = args.n[0]
    with override_settings(**_tolerances(args.tolerance)):
        params = ModelParams.sdm(n, args.param) if args.model == 'sdm' else ModelParams.crf(n, args.param)
        grid = husimi(steady_state(params), args.n_theta, args.n_phi)
    path = Path(args.out) / f"husimi_{params.model.value}_N{n}_{args.param:.6g}.csv"
    emit_husimi(grid, path)
    theta, phi, value = grid.peak
    print(f"pico em θ={theta:.4f}, φ={phi:.4f} (Q={value:.4e}); max/mediana={grid.max_over_median:.4e}")
    print(f"  {path}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    with override_settings(**_tolerances(args.tolerance)):
        report = run_verify(range(2, args.n_max + 1), args.points, args.seed, args.max_deviation)
    print(format_table(
        ('model', 'points', 'failures', 'max_deviation'),
        [(model, int(stats['points']), int(stats['failures']), stats['max_deviation'])
         for model, stats in report.summary().items()],
    ))
    return 0 if report.passed else 1


# ============================================================================
# Parser
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--tolerance', action='append', metavar='CHAVE=VALOR',
                        help="sobrescreve uma tolerância de Settings (repetível)")
    common.add_argument('--out', help="diretório de saída (padrão: results)")
    common.add_argument('--format', choices=('csv', 'json'), default=None)

    parser = argparse.ArgumentParser(
        prog='dicke-steady',
        description="Estados estacionários exatos de modelos de spin com acoplamento global",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')
    sub = parser.add_subparsers(dest='command', required=True)

    sweep = sub.add_parser('sweep', parents=[common], help="varredura de parâmetro")
    sweep.add_argument('--config', help="arquivo YAML de configuração")
    sweep.add_argument('--model', choices=('sdm', 'crf'))
    sweep.add_argument('--n', type=_int_list, help="lista de N, ex: 1000,1001")
    sweep.add_argument('--param-grid', help="ex: zeta=log:1e-4:1:41")
    sweep.add_argument('--analytics', type=_name_list, help="variantes analíticas separadas por vírgula")
    sweep.add_argument('--workers', type=int)
    sweep.set_defaults(handler=cmd_sweep)

    scan = sub.add_parser('scan-optimum', parents=[common], help="mínimo numérico de ξ²")
    scan.add_argument('--model', choices=('sdm', 'crf'), required=True)
    scan.add_argument('--n', type=_int_list, required=True)
    scan.add_argument('--bracket', type=float, nargs=2, metavar=('MIN', 'MAX'))
    scan.add_argument('--grid-points', type=int, default=25)
    scan.add_argument('--xtol', type=float, default=1e-4)
    scan.set_defaults(handler=cmd_scan_optimum)

    fit = sub.add_parser('fit', parents=[common], help="ajuste de escala de ξ²_min(N)")
    fit.add_argument('--input', required=True, help="CSV (N, xi2_min) ou JSON de scan-optimum")
    fit.add_argument('--family', choices=('power', 'log-corrected', 'both'), default='both')
    fit.add_argument('--model', choices=('sdm', 'crf'))
    fit.set_defaults(handler=cmd_fit)

    husimi_parser = sub.add_parser('husimi', parents=[common], help="função Q na esfera")
    husimi_parser.add_argument('--model', choices=('sdm', 'crf'), required=True)
    husimi_parser.add_argument('--n', type=_int_list, required=True)
    husimi_parser.add_argument('--param', type=float, required=True, help="ζ (SDM) ou Υ (CRF)")
    husimi_parser.add_argument('--n-theta', type=int, default=200)
    husimi_parser.add_argument('--n-phi', type=int, default=400)
    husimi_parser.set_defaults(handler=cmd_husimi)

    verify = sub.add_parser('verify', parents=[common], help="forma fechada vs Liouvilliano")
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--points', type=int, default=20, help="pontos por modelo e por N")
    verify.add_argument('--n-max', type=int, default=12)
    verify.add_argument('--max-deviation', type=float, default=1e-8)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Ponto de entrada; retorna 0 apenas quando tudo o que foi pedido deu certo."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    if args.command != 'sweep':
        args.format = args.format or 'csv'
        args.out = args.out or DEFAULT_OUT
    try:
        return args.handler(args)
    except DickeError as exc:
        logger.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
