"""
Subcommand implementations. Each takes a validated ExperimentSpec and
returns the artifact text; writing it out is left to the entry point.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from stationary_mass.cli.output import render_csv, render_json
from stationary_mass.cli.spec import ExperimentSpec
from stationary_mass.errors import UsageError
from stationary_mass.estimators.hybrid import default_transition_point, hybrid_estimate
from stationary_mass.estimators.type import HybridConfig
from stationary_mass.evaluation.rates import plugin_bound_threshold, theorem1_rate, wingit_error_bound
from stationary_mass.evaluation.risk import expected_count_mass, tv_risk_monte_carlo
from stationary_mass.evaluation.type import CONSTANT_NOTE, RISK_CSV_COLUMNS, RiskReport
from stationary_mass.processes.mixing import default_window, model_mixing_time
from stationary_mass.processes.model_builder import ModelBuilder
from stationary_mass.processes.sampler import sample_trajectory
from stationary_mass.seqcore.helpers import read_token_file, token_lines
from stationary_mass.utils.logger import with_logging
from stationary_mass.utils.parallel import ordered_map

logger = logging.getLogger(__name__)


@with_logging('info')
def run_simulate(spec: ExperimentSpec) -> str:
  """
  Sample a trajectory. Default output is a token file (one state label per
  line); --format json gives {"n", "seed", "tokens"}.
  """
  model = ModelBuilder.from_file(spec.model_path)
  seq = sample_trajectory(model, spec.n, spec.seed)
  if spec.format == 'json':
    return render_json({'n': seq.n, 'seed': spec.seed, 'tokens': seq.raw()})
  return token_lines(seq)


@with_logging('info')
def run_estimate(spec: ExperimentSpec) -> str:
  """
  Hybrid estimate from a token file, or from a trajectory sampled from
  --model. Auto tau comes from the model's default window, auto zeta_bar
  from floor(n^(1/3)) - 1.
  """
  if spec.tokens_path is not None:
    seq = read_token_file(spec.tokens_path)
    if seq.n == 0:
      raise UsageError(f'--tokens file {spec.tokens_path} contains no tokens')
    spec.check_window(seq.n)
    tau = spec.tau
  else:
    model = ModelBuilder.from_file(spec.model_path)
    seq = sample_trajectory(model, spec.n, spec.seed)
    tau = default_window(model, seq.n) if spec.tau is None else spec.tau
  zeta_bar = default_transition_point(seq.n) if spec.zeta_bar is None else spec.zeta_bar
  estimate = hybrid_estimate(seq, HybridConfig(tau=tau, zeta_bar=zeta_bar))
  logger.info(f'estimate: n={seq.n} tau={tau} zeta_bar={zeta_bar} nu={estimate.nu!r}')

  if spec.format == 'csv':
    rows = [{'zeta': zeta, 'mass': mass} for zeta, mass in enumerate(estimate.mass.to_list())]
    return render_csv(rows, ['zeta', 'mass'])
  return render_json(estimate.to_dict())


def _risk_reports(spec: ExperimentSpec, grid, parallel_cells: bool) -> List[RiskReport]:
  model = ModelBuilder.from_file(spec.model_path)
  cell_workers = 1 if parallel_cells else spec.workers

  def cell(n: int):
    return tv_risk_monte_carlo(
      model,
      n=n,
      reps=spec.reps,
      seed=spec.seed,
      estimator=spec.estimator,
      tau=spec.tau,
      zeta_bar=spec.zeta_bar,
      cap_factor=spec.cap_factor,
      full_breakdown=spec.full_breakdown,
      workers=cell_workers,
    )

  return ordered_map(cell, grid, spec.workers if parallel_cells else 1)


@with_logging('info')
def run_evaluate(spec: ExperimentSpec) -> str:
  """One RiskReport: full JSON, or a single CSV row."""
  (report,) = _risk_reports(spec, (spec.n,), parallel_cells=False)
  if spec.format == 'csv':
    return render_csv([report.to_row()], RISK_CSV_COLUMNS)
  return render_json(report.to_dict())


@with_logging('info')
def run_sweep(spec: ExperimentSpec) -> str:
  """
  One RiskReport per grid point, rows in grid order. Cells run
  concurrently when workers > 1.
  """
  reports = _risk_reports(spec, spec.n_grid, parallel_cells=True)
  if spec.format == 'json':
    return render_json([report.to_dict() for report in reports])
  return render_csv([report.to_row() for report in reports], RISK_CSV_COLUMNS)


@with_logging('info')
def run_bounds(spec: ExperimentSpec) -> str:
  """
  Reference quantities at one n: the C = 1 rate, default tau / zeta_bar,
  the plug-in coverage threshold at tau0 = t_mix(eps / n^2), and WingIt
  bounds for zeta <= zeta_bar with Monte Carlo E[M^pi].
  """
  model = ModelBuilder.from_file(spec.model_path)
  n = spec.n
  tau = default_window(model, n) if spec.tau is None else spec.tau
  zeta_bar = default_transition_point(n) if spec.zeta_bar is None else spec.zeta_bar
  HybridConfig(tau=tau, zeta_bar=zeta_bar).validate(n)
  tau0 = model_mixing_time(model, spec.eps / (float(n) ** 2))
  threshold = plugin_bound_threshold(tau0, n, spec.delta)

  needed = zeta_bar + 4 * tau - 1
  em, em_se = expected_count_mass(model, n, spec.reps, spec.seed, length=needed, workers=spec.workers)
  # counts never exceed n, so E[M^pi_zeta] = 0 beyond it
  em = np.clip(np.pad(em, (0, needed - em.size)), 0.0, 1.0)
  em_se = np.pad(em_se, (0, needed - em_se.size))
  wingit_rows: List[Dict[str, Any]] = []
  for zeta in range(zeta_bar + 1):
    wingit_rows.append(
      {
        'zeta': zeta,
        'bound': wingit_error_bound(zeta, tau, n, em[zeta:]),
        'expected_mass': float(em[zeta]),
        'expected_mass_se': float(em_se[zeta]),
      }
    )

  if spec.format == 'csv':
    return render_csv(wingit_rows, ['zeta', 'bound', 'expected_mass', 'expected_mass_se'])
  return render_json(
    {
      'n': n,
      'tau': tau,
      'zeta_bar': zeta_bar,
      'theory_rate': theorem1_rate(n, tau) if n >= 2 else None,
      'constant_note': CONSTANT_NOTE,
      'delta': spec.delta,
      'eps': spec.eps,
      'tau0': tau0,
      'plugin_threshold': {
        'zeta_min': threshold.zeta_min,
        'length_threshold': threshold.length_threshold,
        'length_ok': threshold.length_ok,
      },
      'reps': spec.reps,
      'seed': spec.seed,
      'wingit_bounds': wingit_rows,
    }
  )


COMMANDS = {
  'simulate': run_simulate,
  'estimate': run_estimate,
  'evaluate': run_evaluate,
  'sweep': run_sweep,
  'bounds': run_bounds,
}
