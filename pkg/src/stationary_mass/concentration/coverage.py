import logging
import math
from typing import Callable, Optional, Tuple

import numpy as np

from stationary_mass.concentration.bounds import (
  estimate_block_variance,
  mixing_bernstein_radius,
  self_normalized_radius,
)
from stationary_mass.concentration.type import (
  BernsteinInputs,
  CoverageReport,
  Lemma,
  PreconditionFailure,
  SelfNormInputs,
)
from stationary_mass.errors import DomainError
from stationary_mass.processes.sampler import derive_stream, sample_states
from stationary_mass.processes.type import ProcessModel
from stationary_mass.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

Statistic = Callable[[np.ndarray], np.ndarray]


def indicator(target: int) -> Statistic:
  """U_j = 1{X_j = target}."""

  def statistic(states: np.ndarray) -> np.ndarray:
    return (np.asarray(states) == target).astype(np.float64)

  return statistic


def nominal_budget(lemma: Lemma, delta: float, eps: float) -> float:
  if lemma == '2a':
    return 4.0 * delta + eps
  if lemma == '2b':
    return 10.0 * delta + 2.0 * eps
  raise DomainError(f"lemma must be '2a' or '2b', got {lemma!r}")


def empirical_coverage(
  model: ProcessModel,
  lemma: Lemma,
  n: int,
  tau: int,
  delta: float,
  eps: float,
  reps: int,
  seed: int,
  target: int = 0,
  B: float = 1.0,
  v2: Optional[float] = None,
  statistic: Optional[Statistic] = None,
  value_range: Optional[Tuple[float, float]] = None,
  workers: int = 1,
) -> CoverageReport:
  """
  Monte Carlo check of a concentration radius on a simulated process.

  Each replication r samples X^n from the stream derived from (seed, r),
  maps it to U_j = statistic(X_j), and records whether |E[U_1] - mean(U)|
  exceeds the radius. E[U_1] is exact, from the stationary law.

  Args:
      model: process to simulate
      lemma: '2a' (blocked Bernstein, tau is the block length) or '2b'
          (self-normalized, tau is t_mix(eps / n))
      n: trajectory length
      tau: block length or mixing time, see `lemma`
      delta: failure budget
      eps: mixing slack, only enters the nominal budget
      reps: number of replications
      seed: base seed
      target: symbol of the default indicator statistic
      B: bound on U_j; replaced by hi - lo when value_range is given
      v2: normalized block variance; estimated from the replications if None
      statistic: vectorized map from states to values, default 1{X = target}
      value_range: (lo, hi) range of statistic; values are shifted to
          [0, hi - lo]
      workers: thread count for replications

  Returns:
      CoverageReport with observed failure fraction and nominal budget
  """
  if reps < 1:
    raise DomainError(f'reps must be >= 1, got {reps}')
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  nominal = nominal_budget(lemma, delta, eps)

  statistic = statistic or indicator(target)
  shift = 0.0
  if value_range is not None:
    lo, hi = value_range
    if not hi > lo:
      raise DomainError(f'value_range must satisfy lo < hi, got {value_range}')
    shift, B = float(lo), float(hi - lo)

  law = model.stationary_law()
  mean_u = float(np.dot(law, statistic(np.arange(law.size)) - shift))

  def replicate(r: int) -> np.ndarray:
    states = sample_states(model, n, derive_stream(seed, r))
    return statistic(states) - shift

  paths = ordered_map(replicate, range(reps), workers)
  if any(path.min() < 0 or path.max() > B for path in paths):
    raise DomainError(f'statistic left the range [0, {B}] after shifting')

  failures = 0
  gate_failures = 0
  radii = []
  if lemma == '2a':
    if v2 is None:
      v2 = estimate_block_variance(paths, tau)
    radius = mixing_bernstein_radius(BernsteinInputs(n=n, tau=tau, v2=v2, B=B, delta=delta, eps=eps))
    for path in paths:
      if abs(mean_u - math.fsum(path) / n) > radius:
        failures += 1
    radii.append(radius)
  else:
    for path in paths:
      total = math.fsum(path)
      outcome = self_normalized_radius(SelfNormInputs(n=n, B=B, delta=delta, tmix=tau, sumU=total))
      if isinstance(outcome, PreconditionFailure):
        gate_failures += 1
        continue
      radii.append(outcome.radius)
      if abs(mean_u - total / n) > outcome.radius:
        failures += 1
    v2 = float('nan') if v2 is None else v2

  report = CoverageReport(
    lemma=lemma,
    nominal=nominal,
    observed=failures / reps,
    reps=reps,
    gate_failures=gate_failures,
    failures=failures,
    mean_radius=math.fsum(radii) / len(radii) if radii else float('nan'),
    v2=v2,
  )
  logger.debug(
    f'coverage lemma={lemma} n={n} tau={tau} reps={reps}: observed={report.observed!r} '
    f'nominal={nominal!r} se={report.binomial_se!r} gate_failures={gate_failures}'
  )
  return report
