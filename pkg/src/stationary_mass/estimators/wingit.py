"""
WingIt: leave-a-window-out Good-Turing estimation.

For index i (1-based), the dependent window is D_i = {k in [n] : |k - i| < tau}
and the estimator looks at how often X_i occurs outside it. tau = 1 is the
classical Good-Turing estimator.
"""

import logging
from typing import Optional

import numpy as np

from stationary_mass.errors import DomainError, IndexOutOfRangeError
from stationary_mass.seqcore.type import CountMassVector, TokenSequence

logger = logging.getLogger(__name__)


def _check_tau(n: int, tau: int) -> None:
  if not 1 <= tau <= n:
    raise DomainError(f'tau must satisfy 1 <= tau <= n={n}, got {tau}')


def leave_window_count(seq: TokenSequence, i: int, tau: int) -> int:
  """
  N_{X_i}(X_{I_i}): occurrences of X_i at indices k with |k - i| >= tau.

  Args:
      seq: token sequence
      i: 1-based position, 1 <= i <= n
      tau: window size, tau >= 1

  Windows are truncated at the sequence boundaries, never padded.
  """
  n = seq.n
  if not 1 <= i <= n:
    raise IndexOutOfRangeError(f'index i={i} outside [1, {n}]')
  if tau < 1:
    raise DomainError(f'tau must be >= 1, got {tau}')
  symbols = seq.symbols
  x = symbols[i - 1]
  lo = max(1, i - tau + 1)
  hi = min(n, i + tau - 1)
  total = int(np.count_nonzero(symbols == x))
  in_window = int(np.count_nonzero(symbols[lo - 1 : hi] == x))
  return total - in_window


def leave_window_counts(seq: TokenSequence, tau: int) -> np.ndarray:
  """
  Leave-window counts for every position at once.

  Positions of each symbol are sorted inside a single key array
  (symbol * (n + 1) + position), so the in-window count of index i is the
  distance between two binary searches. O(n log n) overall.
  """
  n = seq.n
  if tau < 1:
    raise DomainError(f'tau must be >= 1, got {tau}')
  if n == 0:
    return np.zeros(0, dtype=np.int64)
  symbols = seq.symbols
  pos = np.arange(1, n + 1, dtype=np.int64)
  stride = np.int64(n + 1)
  base = symbols * stride
  sorted_keys = np.sort(base + pos)
  lo = base + np.maximum(1, pos - tau + 1)
  hi = base + np.minimum(n, pos + tau - 1)
  in_window = np.searchsorted(sorted_keys, hi, side='right') - np.searchsorted(sorted_keys, lo, side='left')
  totals = np.bincount(symbols)[symbols]
  return totals - in_window


def wingit_counts(seq: TokenSequence, tau: int) -> np.ndarray:
  """Integer numerators of the full WingIt vector; they sum to n."""
  _check_tau(seq.n, tau)
  return np.bincount(leave_window_counts(seq, tau), minlength=seq.n + 1).astype(np.int64)


def wingit_vector(seq: TokenSequence, tau: int, zeta_max: Optional[int] = None) -> CountMassVector:
  """
  Averaged WingIt estimator, entry zeta = (1/n) sum_i 1{leave_window_count(i) = zeta}.

  Entries above `zeta_max` (default n) are zero. Not normalized.
  """
  n = seq.n
  _check_tau(n, tau)
  zeta_max = n if zeta_max is None else zeta_max
  if not 0 <= zeta_max <= n:
    raise DomainError(f'zeta_max must satisfy 0 <= zeta_max <= n={n}, got {zeta_max}')
  counts = wingit_counts(seq, tau)
  counts[zeta_max + 1 :] = 0
  return CountMassVector(mass=counts / n, normalized=False)


def wingit_vector_naive(seq: TokenSequence, tau: int, zeta_max: Optional[int] = None) -> CountMassVector:
  """Direct double loop over (i, k); O(n^2). Reference implementation for tests."""
  n = seq.n
  _check_tau(n, tau)
  zeta_max = n if zeta_max is None else zeta_max
  symbols = seq.symbols.tolist()
  hits = [0] * (n + 1)
  for i in range(n):
    count = 0
    for k in range(n):
      if abs(k - i) >= tau and symbols[k] == symbols[i]:
        count += 1
    hits[count] += 1
  mass = np.asarray(hits, dtype=np.float64) / n
  mass[zeta_max + 1 :] = 0.0
  return CountMassVector(mass=mass, normalized=False)


def skipped_positions(n: int, tau: int, offset: int) -> np.ndarray:
  """Sampled positions 2*tau*j - offset, j = 1..n/(2*tau) (1-based)."""
  if tau < 1:
    raise DomainError(f'tau must be >= 1, got {tau}')
  if not 0 <= offset <= 2 * tau - 1:
    raise DomainError(f'offset must lie in [0, {2 * tau - 1}], got {offset}')
  if n % (2 * tau) != 0:
    raise DomainError(f'skipped estimator needs 2*tau={2 * tau} to divide n={n}')
  n0 = n // (2 * tau)
  if n0 < 1:
    raise DomainError(f'skipped estimator needs n >= 2*tau, got n={n}')
  positions = 2 * tau * np.arange(1, n0 + 1, dtype=np.int64) - offset
  if positions.min() < 1 or positions.max() > n:
    raise IndexOutOfRangeError(f'sampled position outside [1, {n}]')
  return positions


def wingit_skipped(seq: TokenSequence, tau: int, offset: int, zeta: int) -> float:
  """
  Skipped WingIt estimate: average of 1{N_{X_i}(X_{I_i}) = zeta} over the
  positions i = 2*tau*j - offset only.
  """
  positions = skipped_positions(seq.n, tau, offset)
  leave = leave_window_counts(seq, tau)
  hits = int(np.count_nonzero(leave[positions - 1] == zeta))
  return hits / positions.size
