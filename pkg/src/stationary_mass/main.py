import argparse
import sys
from pathlib import Path
from typing import List, Optional

from stationary_mass import __version__
from stationary_mass.cli.commands import COMMANDS
from stationary_mass.cli.output import write_output
from stationary_mass.cli.spec import ExperimentSpec, parse_auto, parse_grid
from stationary_mass.config.value import config
from stationary_mass.errors import MassError, ModelError, UsageError
from stationary_mass.evaluation.risk import ESTIMATORS
from stationary_mass.utils.logger import configure_logging
from stationary_mass.utils.maintenance import cleanup_old_logs

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_MODEL = 3


def build_parser() -> argparse.ArgumentParser:
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument('--model', type=Path, help='model spec file (JSON)')
  common.add_argument('--tokens', type=Path, help='token file, one token per line')
  common.add_argument('--n', type=int, help='trajectory length')
  common.add_argument('--n-grid', help='comma-separated ascending lengths, e.g. 1000,10000')
  common.add_argument('--tau', default='auto', help='window size, INT or auto')
  common.add_argument('--zeta-bar', default='auto', help='transition point, INT or auto')
  common.add_argument('--reps', type=int, default=100, help='Monte Carlo replications')
  common.add_argument('--seed', type=int, help='unsigned 64-bit seed')
  common.add_argument('--out', type=Path, help='output file (default: stdout)')
  common.add_argument('--format', choices=['csv', 'json'], help='output format')
  common.add_argument('--estimator', choices=ESTIMATORS, default='hybrid')
  common.add_argument('--delta', type=float, default=0.1, help='failure budget for bounds')
  common.add_argument('--eps', type=float, default=0.01, help='mixing slack for bounds')
  common.add_argument('--workers', type=int, help='threads (default: MASS_WORKERS)')
  common.add_argument('--full-breakdown', action='store_true', help='report per-count errors for every zeta')

  parser = argparse.ArgumentParser(
    prog='stationary-mass',
    description='Count-probability mass estimation for mixing sequences',
  )
  parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
  sub = parser.add_subparsers(dest='command', required=True)
  sub.add_parser('simulate', parents=[common], help='sample a trajectory from a model')
  sub.add_parser('estimate', parents=[common], help='hybrid count mass estimate')
  sub.add_parser('evaluate', parents=[common], help='Monte Carlo TV risk at one n')
  sub.add_parser('sweep', parents=[common], help='TV risk over an n grid (CSV)')
  sub.add_parser('bounds', parents=[common], help='reference rate and per-count bounds')
  return parser


def spec_from_args(args: argparse.Namespace) -> ExperimentSpec:
  spec = ExperimentSpec(
    command=args.command,
    model_path=args.model,
    tokens_path=args.tokens,
    n=args.n,
    n_grid=parse_grid(args.n_grid) if args.n_grid is not None else (),
    tau=parse_auto(args.tau, '--tau', minimum=1),
    zeta_bar=parse_auto(args.zeta_bar, '--zeta-bar'),
    reps=args.reps,
    seed=args.seed,
    out=args.out,
    format=args.format,
    estimator=args.estimator,
    delta=args.delta,
    eps=args.eps,
    workers=config.workers if args.workers is None else args.workers,
    cap_factor=config.breakdown_cap_factor,
    full_breakdown=args.full_breakdown,
  )
  spec.validate()
  return spec


def main(argv: Optional[List[str]] = None) -> int:
  args = build_parser().parse_args(argv)

  configure_logging(config)
  cleanup_old_logs(config, days=config.log_retention_days)

  try:
    spec = spec_from_args(args)
    text = COMMANDS[spec.command](spec)
    write_output(text, spec.out)
  except UsageError as e:
    sys.stderr.write(f'usage error: {e}\n')
    return EXIT_USAGE
  except ModelError as e:
    sys.stderr.write(f'model error: {e}\n')
    return EXIT_MODEL
  except (MassError, OSError) as e:
    sys.stderr.write(f'error: {e}\n')
    return EXIT_ERROR
  return EXIT_OK


if __name__ == '__main__':
  sys.exit(main())
