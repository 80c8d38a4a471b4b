import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

import numpy as np

from stationary_mass.errors import DomainError
from stationary_mass.estimators.hybrid import default_transition_point, hybrid_estimate
from stationary_mass.estimators.plugin import plugin_vector
from stationary_mass.estimators.type import HybridConfig
from stationary_mass.estimators.wingit import wingit_vector
from stationary_mass.evaluation.rates import theorem1_rate
from stationary_mass.evaluation.truth import true_count_mass
from stationary_mass.evaluation.type import GroundTruth, RiskReport
from stationary_mass.processes.mixing import default_window
from stationary_mass.processes.sampler import derive_stream, sample_states, sequence_probability
from stationary_mass.processes.type import ProcessModel
from stationary_mass.seqcore.helpers import l1_distance, tv_distance
from stationary_mass.seqcore.type import CountMassVector, TokenSequence
from stationary_mass.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

Estimator = Literal['hybrid', 'wingit', 'plugin']
ESTIMATORS: Tuple[str, ...] = ('hybrid', 'wingit', 'plugin')

EXACT_RISK_MAX_PATHS = 10**6


def estimate_count_mass(seq: TokenSequence, estimator: Estimator, cfg: HybridConfig) -> CountMassVector:
  """Count mass vector of the chosen estimator; `cfg.tau` is ignored by plug-in."""
  if estimator == 'hybrid':
    return hybrid_estimate(seq, cfg).mass
  if estimator == 'wingit':
    return wingit_vector(seq, cfg.tau)
  if estimator == 'plugin':
    return plugin_vector(seq)
  raise DomainError(f'estimator must be one of {", ".join(ESTIMATORS)}, got {estimator!r}')


def resolve_config(model: ProcessModel, n: int, tau: Optional[int] = None, zeta_bar: Optional[int] = None) -> HybridConfig:
  """None means auto: tau from the model's mixing time at n^-5, zeta_bar = floor(n^(1/3)) - 1."""
  tau = default_window(model, n) if tau is None else tau
  zeta_bar = default_transition_point(n) if zeta_bar is None else zeta_bar
  cfg = HybridConfig(tau=tau, zeta_bar=zeta_bar)
  cfg.validate(n)
  return cfg


@dataclass(frozen=True)
class _Replication:
  tv: float
  l1: float
  abs_error: np.ndarray
  truth: np.ndarray


def _mean_and_se(values: List[float]) -> Tuple[float, float]:
  mean = math.fsum(values) / len(values)
  if len(values) < 2:
    return mean, 0.0
  var = math.fsum((v - mean) ** 2 for v in values) / (len(values) - 1)
  return mean, math.sqrt(var / len(values))


def _column_mean_and_se(rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
  mean = rows.mean(axis=0)
  if rows.shape[0] < 2:
    return mean, np.zeros_like(mean)
  return mean, rows.std(axis=0, ddof=1) / math.sqrt(rows.shape[0])


def breakdown_length(n: int, cfg: HybridConfig, cap_factor: int = 3, full: bool = False) -> int:
  """
  Number of leading count entries kept in per-count breakdowns: up to
  cap_factor * zeta_bar, extended to zeta_bar + 4 tau - 2 so the WingIt
  bound inputs for every zeta <= zeta_bar are present.
  """
  if full:
    return n + 1
  last = max(cap_factor * cfg.zeta_bar, cfg.zeta_bar + 4 * cfg.tau - 2)
  return min(n, last) + 1


def tv_risk_monte_carlo(
  model: ProcessModel,
  n: int,
  reps: int,
  seed: int,
  estimator: Estimator = 'hybrid',
  tau: Optional[int] = None,
  zeta_bar: Optional[int] = None,
  cap_factor: int = 3,
  full_breakdown: bool = False,
  workers: int = 1,
) -> RiskReport:
  """
  Monte Carlo estimate of E[d_TV(M_hat, M^pi)].

  Replication r samples X^n from the stream derived from (seed, r), so the
  report depends only on the arguments, never on `workers`.

  Args:
      model: process to simulate
      n: trajectory length
      reps: number of replications
      seed: base seed
      estimator: 'hybrid', 'wingit' or 'plugin'
      tau: window size, None for the model's default window
      zeta_bar: transition point, None for floor(n^(1/3)) - 1
      cap_factor: per-count breakdown covers zeta <= cap_factor * zeta_bar
      full_breakdown: report every zeta = 0..n instead
      workers: thread count for replications

  Returns:
      RiskReport with TV mean and standard error, l1 mean, the C = 1
      reference rate, per-count mean absolute errors and mean true masses
  """
  if reps < 1:
    raise DomainError(f'reps must be >= 1, got {reps}')
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  cfg = resolve_config(model, n, tau, zeta_bar)
  gt = GroundTruth(pi=model.stationary_law())
  keep = breakdown_length(n, cfg, cap_factor, full_breakdown)

  def replicate(r: int) -> _Replication:
    seq = TokenSequence.from_states(sample_states(model, n, derive_stream(seed, r)))
    truth = true_count_mass(gt, seq)
    estimate = estimate_count_mass(seq, estimator, cfg)
    return _Replication(
      tv=tv_distance(estimate, truth),
      l1=l1_distance(estimate, truth),
      abs_error=np.abs(estimate.mass[:keep] - truth.mass[:keep]),
      truth=truth.mass[:keep].copy(),
    )

  results = ordered_map(replicate, range(reps), workers)
  tv_mean, tv_se = _mean_and_se([res.tv for res in results])
  l1_mean = math.fsum(res.l1 for res in results) / reps
  per_zeta_mae = np.mean(np.stack([res.abs_error for res in results]), axis=0)
  expected_mass, expected_mass_se = _column_mean_and_se(np.stack([res.truth for res in results]))

  report = RiskReport(
    n=n,
    tau=cfg.tau,
    zeta_bar=cfg.zeta_bar,
    reps=reps,
    tv_mean=tv_mean,
    tv_se=tv_se,
    l1_mean=l1_mean,
    theory_rate=theorem1_rate(n, cfg.tau) if n >= 2 else float('nan'),
    estimator=estimator,
    per_zeta_mae=per_zeta_mae,
    expected_mass=expected_mass,
    expected_mass_se=expected_mass_se,
  )
  logger.debug(f'{estimator} risk at n={n}, tau={cfg.tau}, zeta_bar={cfg.zeta_bar}: {tv_mean!r} +- {tv_se!r}')
  return report


def expected_count_mass(
  model: ProcessModel,
  n: int,
  reps: int,
  seed: int,
  length: Optional[int] = None,
  workers: int = 1,
) -> Tuple[np.ndarray, np.ndarray]:
  """
  Monte Carlo E[M^pi_zeta] for zeta = 0..length - 1, with standard errors.

  Args:
      length: number of leading entries, default n + 1
  """
  if reps < 1:
    raise DomainError(f'reps must be >= 1, got {reps}')
  length = n + 1 if length is None else min(length, n + 1)
  gt = GroundTruth(pi=model.stationary_law())

  def replicate(r: int) -> np.ndarray:
    seq = TokenSequence.from_states(sample_states(model, n, derive_stream(seed, r)))
    return true_count_mass(gt, seq).mass[:length].copy()

  return _column_mean_and_se(np.stack(ordered_map(replicate, range(reps), workers)))


def exact_tv_risk(
  model: ProcessModel,
  n: int,
  estimator: Estimator = 'plugin',
  tau: int = 1,
  zeta_bar: int = 0,
) -> float:
  """
  E[d_TV(M_hat, M^pi)] by enumerating every length-n path with its exact
  probability. Limited to |X|^n <= 10^6 paths.
  """
  alphabet = model.alphabet_size
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  if alphabet**n > EXACT_RISK_MAX_PATHS:
    raise DomainError(f'{alphabet}^{n} paths exceed the enumeration limit {EXACT_RISK_MAX_PATHS}')
  cfg = HybridConfig(tau=tau, zeta_bar=zeta_bar)
  cfg.validate(n)
  gt = GroundTruth(pi=model.stationary_law())

  terms = []
  for path in itertools.product(range(alphabet), repeat=n):
    p = sequence_probability(model, path)
    if p == 0.0:
      continue
    seq = TokenSequence.from_states(path)
    terms.append(p * tv_distance(estimate_count_mass(seq, estimator, cfg), true_count_mass(gt, seq)))
  return math.fsum(terms)
