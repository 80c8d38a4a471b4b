"""
Reference rates and per-count error bounds.

Every universal constant is fixed to 1, so these are shapes rather than
certified bounds.
"""

import math
from typing import Sequence

import numpy as np

from stationary_mass.errors import DomainError
from stationary_mass.evaluation.type import PluginThreshold

PLUGIN_LENGTH_GATE = 24


def theorem1_rate(n: int, tau: int) -> float:
  """sqrt(tau log n) / n^(1/6)."""
  if n < 2:
    raise DomainError(f'n must be >= 2, got {n}')
  if tau < 1:
    raise DomainError(f'tau must be >= 1, got {tau}')
  return math.sqrt(tau * math.log(n)) / n ** (1.0 / 6.0)


def plugin_error_bound(zeta: int, tau0: int, n: int, phi_zeta: int, delta: float) -> float:
  """
  sqrt(zeta tau0) phi_zeta sqrt(log(n / delta)) / n, with tau0 = t_mix(eps / n^2).

  Holds with probability >= 1 - delta - 3 eps for zeta at or above
  plugin_bound_threshold.
  """
  if zeta < 1:
    raise DomainError(f'zeta must be >= 1, got {zeta}')
  if tau0 < 1:
    raise DomainError(f'tau0 must be >= 1, got {tau0}')
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  if phi_zeta < 0:
    raise DomainError(f'phi_zeta must be >= 0, got {phi_zeta}')
  if not 0 < delta <= 1:
    raise DomainError(f'delta must lie in (0, 1], got {delta}')
  return math.sqrt(zeta * tau0) * phi_zeta * math.sqrt(math.log(n / delta)) / n


def plugin_bound_threshold(tau0: int, n: int, delta: float) -> PluginThreshold:
  """
  Counts covered by plugin_error_bound:
  zeta >= max{36 tau0 log(22n/delta), 1 + sqrt(4 + 8 tau0 log(11n/delta)) + 4 tau0 log(11n/delta) / 3},
  and only when n >= 24 tau0.
  """
  if tau0 < 1:
    raise DomainError(f'tau0 must be >= 1, got {tau0}')
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  if not 0 < delta <= 1:
    raise DomainError(f'delta must lie in (0, 1], got {delta}')
  log22 = math.log(22.0 * n / delta)
  log11 = math.log(11.0 * n / delta)
  zeta_min = max(36.0 * tau0 * log22, 1.0 + math.sqrt(4.0 + 8.0 * tau0 * log11) + 4.0 * tau0 * log11 / 3.0)
  length_threshold = PLUGIN_LENGTH_GATE * tau0
  return PluginThreshold(zeta_min=zeta_min, length_threshold=length_threshold, length_ok=n >= length_threshold)


def wingit_error_bound(zeta: int, tau: int, n: int, EM: Sequence[float]) -> float:
  """
  Expected per-count WingIt error:
  sqrt(tau/n) (sqrt(EM[0]) + sqrt(zeta log(2 tau) EM[0])
  + sqrt(sum_{u=1}^{4tau-2} (zeta + u)/u EM[u])) + (zeta + 1) tau / n.

  Args:
      zeta: count, >= 0
      tau: window size, tau >= t_mix(n^-2)
      n: sequence length
      EM: E[M^pi_{zeta+u}] for u = 0..4tau-2; extra entries are ignored
  """
  if zeta < 0:
    raise DomainError(f'zeta must be >= 0, got {zeta}')
  if tau < 1:
    raise DomainError(f'tau must be >= 1, got {tau}')
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  em = np.asarray(EM, dtype=np.float64).reshape(-1)
  needed = 4 * tau - 1
  if em.size < needed:
    raise DomainError(f'EM needs {needed} entries (u = 0..{needed - 1}), got {em.size}')
  em = em[:needed]
  if not np.all(np.isfinite(em)) or em.min() < 0 or em.max() > 1:
    raise DomainError('EM entries must lie in [0, 1]')
  u = np.arange(1, needed, dtype=np.float64)
  tail = math.fsum((zeta + u) / u * em[1:])
  head = math.sqrt(em[0]) + math.sqrt(zeta * math.log(2.0 * tau) * em[0])
  return math.sqrt(tau / n) * (head + math.sqrt(tail)) + (zeta + 1) * tau / n
