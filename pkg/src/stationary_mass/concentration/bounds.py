"""
Concentration radii for bounded functionals of a mixing sequence.

The blocked Bernstein radius works from a variance proxy; the
self-normalized radius scales with the realized sum and only applies above
two gates. Constants are used as stated, they are not tuned.
"""

import logging
import math
from typing import Sequence

import numpy as np

from stationary_mass.concentration.type import (
  BernsteinInputs,
  BlockDecomposition,
  PreconditionFailure,
  SelfNormInputs,
  SelfNormOutcome,
  SelfNormRadius,
)
from stationary_mass.errors import DomainError
from stationary_mass.seqcore.helpers import spread

logger = logging.getLogger(__name__)

SELF_NORM_SCALE = 82.0
SELF_NORM_SUM_GATE = 36.0
SELF_NORM_LENGTH_GATE = 24


def block_decompose(values: Sequence[float], tau: int) -> BlockDecomposition:
  """
  Sum values over consecutive length-tau blocks and split by block parity.

  Examples:
      (1, 2, 3, 4), tau=1 -> odd (1, 3), even (2, 4)
      (1, 2, 3, 4), tau=2 -> odd (3,), even (7,)
  """
  arr = np.asarray(values).reshape(-1)
  n = arr.size
  if tau < 1:
    raise DomainError(f'tau must be >= 1, got {tau}')
  if n < tau:
    raise DomainError(f'block decomposition needs n >= tau, got n={n}, tau={tau}')
  blocks = n // tau
  sums = arr[: blocks * tau].reshape(blocks, tau).sum(axis=1)
  return BlockDecomposition(
    odd_block_sums=sums[0::2],
    even_block_sums=sums[1::2],
    tau=tau,
    remainder=n - blocks * tau,
  )


def mixing_bernstein_radius(inputs: BernsteinInputs) -> float:
  """
  sqrt(4 tau v2 log(1/delta) / n) + 4 B tau log(1/delta) / (3 n).

  Covers |E[U_1] - mean(U)| with probability >= 1 - 4 delta - eps once
  tau >= t_mix(eps / n).
  """
  log_term = math.log(1.0 / inputs.delta)
  n, tau = inputs.n, inputs.tau
  return math.sqrt(4.0 * tau * inputs.v2 * log_term / n) + 4.0 * inputs.B * tau * log_term / (3.0 * n)


def self_normalized_radius(inputs: SelfNormInputs) -> SelfNormOutcome:
  """
  82 sqrt(B log(2/delta) sumU tmix) / n, valid with probability
  >= 1 - 10 delta - 2 eps.

  Returns a PreconditionFailure instead when sumU < 36 B log(2/delta) tmix
  or n < 24 tmix.
  """
  log_term = math.log(2.0 / inputs.delta)
  sum_threshold = SELF_NORM_SUM_GATE * inputs.B * log_term * inputs.tmix
  length_threshold = SELF_NORM_LENGTH_GATE * inputs.tmix
  sum_ok = inputs.sumU >= sum_threshold
  length_ok = inputs.n >= length_threshold
  if not (sum_ok and length_ok):
    return PreconditionFailure(
      sum_threshold=sum_threshold,
      length_threshold=length_threshold,
      sum_ok=sum_ok,
      length_ok=length_ok,
    )
  radius = SELF_NORM_SCALE * math.sqrt(inputs.B * log_term * inputs.sumU * inputs.tmix) / inputs.n
  return SelfNormRadius(radius=radius)


def empirical_bernstein_radius(values: Sequence[float], delta: float) -> float:
  """
  Empirical Bernstein half-width for i.i.d. values in [0, 1]:
  sqrt(2 sp log(2/delta) / m) + 7 log(2/delta) / (3 (m - 1)), sp the spread.

  Args:
      values: m >= 2 observations in [0, 1]
      delta: failure budget in (0, 1]
  """
  arr = np.asarray(values, dtype=np.float64).reshape(-1)
  m = arr.size
  if m < 2:
    raise DomainError(f'empirical Bernstein radius needs at least 2 values, got {m}')
  if arr.min() < 0 or arr.max() > 1:
    raise DomainError('empirical Bernstein radius needs values in [0, 1]')
  if not 0 < delta <= 1:
    raise DomainError(f'delta must lie in (0, 1], got {delta}')
  log_term = math.log(2.0 / delta)
  return math.sqrt(2.0 * spread(arr) * log_term / m) + 7.0 * log_term / (3.0 * (m - 1))


def estimate_block_variance(paths: Sequence[np.ndarray], tau: int) -> float:
  """
  v2 = var(block sum) / tau^2, from the block sums of every path pooled.

  Uses the unbiased sample variance; needs at least two blocks overall.
  """
  sums = [block_decompose(path, tau).block_sums() for path in paths]
  pooled = np.concatenate(sums) if sums else np.zeros(0)
  if pooled.size < 2:
    raise DomainError(f'need at least 2 blocks of length {tau} to estimate v2, got {pooled.size}')
  v2 = float(np.var(pooled.astype(np.float64), ddof=1)) / (tau * tau)
  logger.debug(f'estimated v2={v2!r} from {pooled.size} blocks of length {tau}')
  return v2
