import logging

import numpy as np

from stationary_mass.errors import DomainError
from stationary_mass.estimators.plugin import plugin_counts
from stationary_mass.estimators.type import HybridConfig, HybridEstimate
from stationary_mass.estimators.wingit import wingit_counts
from stationary_mass.seqcore.type import CountMassVector, TokenSequence

logger = logging.getLogger(__name__)


def integer_cube_root(n: int) -> int:
  """Largest k with k**3 <= n."""
  if n < 0:
    raise DomainError(f'cube root of negative n={n}')
  k = int(round(n ** (1.0 / 3.0)))
  while k**3 > n:
    k -= 1
  while (k + 1) ** 3 <= n:
    k += 1
  return k


def default_transition_point(n: int) -> int:
  """zeta_bar = floor(n^(1/3)) - 1, clamped at 0."""
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  return max(0, integer_cube_root(n) - 1)


def hybrid_estimate(seq: TokenSequence, cfg: HybridConfig) -> HybridEstimate:
  """
  WingIt entries for zeta <= zeta_bar, plug-in entries above, divided by
  their sum nu.

  When nu is 0 the plug-in vector (which always sums to 1) is returned and
  the estimate is flagged as a fallback.
  """
  n = seq.n
  cfg.validate(n)
  numerators = plugin_counts(seq)
  wingit = wingit_counts(seq, cfg.tau)
  numerators[: cfg.zeta_bar + 1] = wingit[: cfg.zeta_bar + 1]
  unnormalized = CountMassVector(mass=numerators / n, normalized=False)

  total = int(numerators.sum())
  if total == 0:
    logger.warning(f'nu = 0 for n={n}, tau={cfg.tau}, zeta_bar={cfg.zeta_bar}; falling back to plug-in')
    fallback = plugin_counts(seq)
    return HybridEstimate(
      mass=CountMassVector(mass=fallback / n, normalized=True),
      unnormalized=unnormalized,
      nu=0.0,
      config=cfg,
      fallback=True,
    )

  nu = total / n
  logger.debug(f'hybrid estimate n={n} tau={cfg.tau} zeta_bar={cfg.zeta_bar} nu={nu}')
  mass = numerators.astype(np.float64) / total
  return HybridEstimate(
    mass=CountMassVector(mass=mass, normalized=True),
    unnormalized=unnormalized,
    nu=nu,
    config=cfg,
  )
