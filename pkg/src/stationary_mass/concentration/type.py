import math
from dataclasses import dataclass
from typing import Any, Dict, Literal, Union

import numpy as np

from stationary_mass.errors import DomainError

Lemma = Literal['2a', '2b']


def _check_delta(delta: float) -> None:
  if not 0 < delta <= 1:
    raise DomainError(f'delta must lie in (0, 1], got {delta}')


@dataclass(frozen=True)
class BernsteinInputs:
  """
  Inputs of the blocked Bernstein radius.

  Attributes:
      n: sequence length
      tau: block length
      v2: normalized block variance var(sum of tau consecutive U_j) / tau^2
      B: almost-sure bound on U_j
      delta: failure budget
      eps: mixing slack
  """

  n: int
  tau: int
  v2: float
  B: float
  delta: float
  eps: float = 0.0

  def __post_init__(self):
    if self.n < 1:
      raise DomainError(f'n must be >= 1, got {self.n}')
    if self.tau < 1:
      raise DomainError(f'tau must be >= 1, got {self.tau}')
    if not (self.v2 >= 0 and math.isfinite(self.v2)):
      raise DomainError(f'v2 must be finite and >= 0, got {self.v2}')
    if not self.B > 0:
      raise DomainError(f'B must be > 0, got {self.B}')
    _check_delta(self.delta)
    if not self.eps >= 0:
      raise DomainError(f'eps must be >= 0, got {self.eps}')


@dataclass(frozen=True)
class SelfNormInputs:
  """Inputs of the self-normalized radius; `tmix` is the mixing time at eps/n."""

  n: int
  B: float
  delta: float
  tmix: int
  sumU: float

  def __post_init__(self):
    if self.n < 1:
      raise DomainError(f'n must be >= 1, got {self.n}')
    if not self.B > 0:
      raise DomainError(f'B must be > 0, got {self.B}')
    _check_delta(self.delta)
    if self.tmix < 1:
      raise DomainError(f'tmix must be >= 1, got {self.tmix}')
    if not self.sumU >= 0:
      raise DomainError(f'sumU must be >= 0, got {self.sumU}')


@dataclass(frozen=True)
class BlockDecomposition:
  """
  Sums over consecutive length-tau blocks, split by block parity.

  Block k (1-based) covers indices ((k - 1) tau, k tau]. Odd blocks are
  k = 1, 3, ...; the tail of length n mod tau is dropped and its length
  kept in `remainder`.
  """

  odd_block_sums: np.ndarray
  even_block_sums: np.ndarray
  tau: int
  remainder: int

  @property
  def blocks(self) -> int:
    return int(self.odd_block_sums.size + self.even_block_sums.size)

  @property
  def covered(self) -> int:
    return self.blocks * self.tau

  def block_sums(self) -> np.ndarray:
    """All block sums back in block order."""
    out = np.empty(self.blocks, dtype=np.result_type(self.odd_block_sums, self.even_block_sums))
    out[0::2] = self.odd_block_sums
    out[1::2] = self.even_block_sums
    return out


@dataclass(frozen=True)
class SelfNormRadius:
  radius: float


@dataclass(frozen=True)
class PreconditionFailure:
  """
  The self-normalized bound does not apply: the realized sum is below
  `sum_threshold` or n is below `length_threshold`.
  """

  sum_threshold: float
  length_threshold: int
  sum_ok: bool
  length_ok: bool

  @property
  def reason(self) -> str:
    failed = []
    if not self.sum_ok:
      failed.append(f'sum of U below {self.sum_threshold:.6g}')
    if not self.length_ok:
      failed.append(f'n below {self.length_threshold}')
    return ' and '.join(failed)


SelfNormOutcome = Union[SelfNormRadius, PreconditionFailure]


@dataclass(frozen=True)
class CoverageReport:
  """
  Empirical failure frequency of a concentration radius.

  `observed` is failures / reps. For the self-normalized bound a failure is
  a replication where the gates hold and the deviation exceeds the radius;
  replications failing a gate are counted in `gate_failures`.
  """

  lemma: Lemma
  nominal: float
  observed: float
  reps: int
  gate_failures: int
  failures: int
  mean_radius: float
  v2: float = float('nan')

  @property
  def binomial_se(self) -> float:
    p = min(max(self.nominal, 0.0), 1.0)
    return math.sqrt(p * (1.0 - p) / self.reps)

  def to_dict(self) -> Dict[str, Any]:
    return {
      'lemma': self.lemma,
      'nominal': self.nominal,
      'observed': self.observed,
      'reps': self.reps,
      'gate_failures': self.gate_failures,
    }
