"""Matrix-level Markov chain utilities: validation, stationary law, TV mixing proxy"""

import logging

import numpy as np
import scipy.linalg

from stationary_mass.errors import DomainError, ModelError

logger = logging.getLogger(__name__)

ROW_SUM_TOL = 1e-12
STATIONARY_TOL = 1e-10
DIRECT_SOLVE_MAX_STATES = 2000
MIXING_ITERATION_CAP = 10**6


def check_stochastic(matrix, name: str = 'P', square: bool = True) -> np.ndarray:
  """Validate a row-stochastic matrix and return it as a float array."""
  P = np.array(matrix, dtype=np.float64)
  if P.ndim != 2 or P.shape[0] == 0 or P.shape[1] == 0:
    raise ModelError(f'{name} must be a non-empty 2-D matrix')
  if square and P.shape[0] != P.shape[1]:
    raise ModelError(f'{name} must be square, got shape {P.shape}')
  if not np.all(np.isfinite(P)):
    raise ModelError(f'{name} has non-finite entries')
  if P.min() < 0:
    raise ModelError(f'{name} has negative entries')
  row_err = np.abs(P.sum(axis=1) - 1.0).max()
  if row_err > ROW_SUM_TOL:
    raise ModelError(f'{name} is not row-stochastic (max row-sum error {row_err:.3e})')
  return P


def check_distribution(vector, name: str = 'pi') -> np.ndarray:
  p = np.array(vector, dtype=np.float64).reshape(-1)
  if p.size == 0:
    raise ModelError(f'{name} must be non-empty')
  if not np.all(np.isfinite(p)) or p.min() < 0:
    raise ModelError(f'{name} must have finite nonnegative entries')
  if abs(p.sum() - 1.0) > ROW_SUM_TOL:
    raise ModelError(f'{name} does not sum to 1 (sum={p.sum()!r})')
  return p


def is_primitive(P: np.ndarray) -> bool:
  """
  True when some power of P up to m^2 is strictly positive (irreducible and
  aperiodic). m^2 exceeds Wielandt's bound (m - 1)^2 + 1, and a primitive
  pattern stays positive for all larger powers, so checking P^(m^2) suffices.
  """
  m = P.shape[0]
  pattern = (P > 0).astype(np.float64)
  result = None
  exponent = m * m
  while exponent:
    if exponent & 1:
      result = pattern if result is None else ((result @ pattern) > 0).astype(np.float64)
    exponent >>= 1
    if exponent:
      pattern = ((pattern @ pattern) > 0).astype(np.float64)
  return bool(np.all(result > 0))


def _power_iteration(P: np.ndarray) -> np.ndarray:
  m = P.shape[0]
  pi = np.full(m, 1.0 / m)
  for _ in range(MIXING_ITERATION_CAP):
    nxt = pi @ P
    if np.abs(nxt - pi).sum() <= 1e-12:
      return nxt
    pi = nxt
  raise ModelError('power iteration did not converge (chain mixes too slowly)')


def stationary_distribution(P) -> np.ndarray:
  """
  Stationary law of an ergodic chain: pi P = pi, sum(pi) = 1.

  Direct linear solve up to 2000 states, power iteration beyond.

  Raises:
      ModelError: P not row-stochastic, or not ergodic
  """
  P = check_stochastic(P)
  m = P.shape[0]
  if not is_primitive(P):
    raise ModelError('P is not ergodic: no strictly positive power up to m^2 (reducible or periodic)')

  if m <= DIRECT_SOLVE_MAX_STATES:
    A = P.T - np.eye(m)
    A[-1, :] = 1.0
    b = np.zeros(m)
    b[-1] = 1.0
    pi = scipy.linalg.solve(A, b)
  else:
    pi = _power_iteration(P)

  pi = np.clip(pi, 0.0, None)
  pi = pi / pi.sum()
  residual = np.abs(pi @ P - pi).max()
  if residual > STATIONARY_TOL:
    raise ModelError(f'stationary solve residual {residual:.3e} exceeds {STATIONARY_TOL}')
  logger.debug(f'stationary distribution over {m} states, residual {residual:.3e}')
  return pi


def _max_row_tv(D: np.ndarray) -> float:
  return 0.5 * float(np.abs(D).sum(axis=1).max())


def tv_mixing_proxy(P: np.ndarray, pi: np.ndarray, eps: float, cap: int = MIXING_ITERATION_CAP) -> int:
  """
  Smallest tau with max_x d_TV(P^tau(x, .), pi) <= eps.

  Works on D_tau = P^tau - 1 pi^T, which satisfies D_(a+b) = D_a D_b, so the
  search doubles tau and then bisects with stored powers. The deviation is
  carried directly rather than as P^tau - pi, which keeps it accurate for
  eps far below machine precision.
  """
  if not eps > 0:
    raise DomainError(f'eps must be > 0, got {eps}')
  D = P - np.outer(np.ones(P.shape[0]), pi)
  if _max_row_tv(D) <= eps:
    return 1

  powers = [D]
  tau = 1
  too_slow = ModelError(f'chain mixes too slowly: no tau <= {cap} reaches eps={eps:.3e}')
  while True:
    if tau >= cap:
      raise too_slow
    D = powers[-1] @ powers[-1]
    tau *= 2
    powers.append(D)
    if _max_row_tv(D) <= eps:
      break

  # tau/2 fails, tau succeeds; binary lifting over the stored powers
  lo = tau // 2
  current = powers[-2]
  for j in range(len(powers) - 3, -1, -1):
    candidate = current @ powers[j]
    if _max_row_tv(candidate) > eps:
      lo += 2**j
      current = candidate
  if lo + 1 > cap:
    raise too_slow
  return lo + 1
