import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from stationary_mass.errors import DomainError
from stationary_mass.seqcore.type import NORMALIZATION_TOL, CountMassVector


@dataclass(frozen=True)
class HybridConfig:
  """Window size tau and transition point zeta_bar of the hybrid estimator."""

  tau: int
  zeta_bar: int

  def validate(self, n: int) -> None:
    if not 1 <= self.tau <= n:
      raise DomainError(f'tau must satisfy 1 <= tau <= n={n}, got {self.tau}')
    if not 0 <= self.zeta_bar <= n:
      raise DomainError(f'zeta_bar must satisfy 0 <= zeta_bar <= n={n}, got {self.zeta_bar}')


@dataclass(frozen=True)
class HybridEstimate:
  """
  Output of the hybrid estimator.

  Attributes:
      mass: normalized count mass vector
      unnormalized: WingIt entries up to zeta_bar, plug-in above, before dividing by nu
      nu: normalizing constant (0.0 when the fallback fired)
      fallback: True when nu was 0 and the plug-in vector was returned instead
  """

  mass: CountMassVector
  unnormalized: CountMassVector
  nu: float
  config: HybridConfig
  fallback: bool = False

  @property
  def n(self) -> int:
    return self.mass.n

  def to_dict(self) -> Dict[str, Any]:
    return {
      'n': self.n,
      'tau': self.config.tau,
      'zeta_bar': self.config.zeta_bar,
      'nu': float(self.nu),
      'mass': self.mass.to_list(),
      'fallback': self.fallback,
    }


@dataclass(frozen=True)
class NaturalDistribution:
  """
  Distribution estimate giving equal mass to symbols with equal counts.

  `observed[x]` is the mass of observed symbol ID x. Unseen symbols either
  each get `unseen_each` (alphabet size known, `unseen_count` of them) or
  share the aggregate `unseen_lump` (alphabet size unknown).
  `orphan_mass` records count mass that sat on classes with no symbols and
  was redistributed.
  """

  observed: np.ndarray
  unseen_count: Optional[int] = None
  unseen_each: float = 0.0
  unseen_lump: Optional[float] = None
  orphan_mass: float = 0.0

  def __post_init__(self):
    observed = np.array(self.observed, dtype=np.float64).reshape(-1)
    observed.setflags(write=False)
    object.__setattr__(self, 'observed', observed)
    if (self.unseen_count is None) == (self.unseen_lump is None):
      raise DomainError('Exactly one of unseen_count and unseen_lump must be set')
    if observed.size and observed.min() < 0:
      raise DomainError('Natural distribution masses must be >= 0')
    if self.unseen_each < 0 or (self.unseen_lump or 0.0) < 0:
      raise DomainError('Unseen mass must be >= 0')
    if abs(self.total() - 1.0) > NORMALIZATION_TOL:
      raise DomainError(f'Natural distribution sums to {self.total()!r}')

  @property
  def alphabet_known(self) -> bool:
    return self.unseen_count is not None

  def unseen_total(self) -> float:
    if self.alphabet_known:
      return self.unseen_count * self.unseen_each
    return float(self.unseen_lump)

  def total(self) -> float:
    return math.fsum(self.observed) + self.unseen_total()

  def as_vector(self) -> np.ndarray:
    """Observed masses followed by one entry per unseen symbol (or the lump)."""
    if self.alphabet_known:
      tail = np.full(self.unseen_count, self.unseen_each)
    else:
      tail = np.array([self.unseen_lump])
    return np.concatenate([self.observed, tail])
