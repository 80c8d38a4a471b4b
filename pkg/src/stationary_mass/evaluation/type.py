import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Hashable, List, Optional, Tuple

import numpy as np

from stationary_mass.errors import DomainError
from stationary_mass.processes.markov import check_distribution

CONSTANT_NOTE = 'constant-free shape'

RISK_CSV_COLUMNS = ['n', 'tau', 'zeta_bar', 'reps', 'tv_mean', 'tv_se', 'l1_mean', 'theory_rate']


@dataclass(frozen=True)
class GroundTruth:
  """
  Stationary symbol law over the full alphabet.

  `labels[x]` is the raw token of alphabet entry x; defaults to the integer
  state labels 0..|X|-1 used by the simulators.
  """

  pi: np.ndarray
  labels: Optional[Tuple[Hashable, ...]] = None

  def __post_init__(self):
    pi = check_distribution(self.pi)
    pi.setflags(write=False)
    object.__setattr__(self, 'pi', pi)
    labels = tuple(range(pi.size)) if self.labels is None else tuple(self.labels)
    if len(labels) != pi.size:
      raise DomainError(f'{len(labels)} labels for an alphabet of size {pi.size}')
    if len(set(labels)) != len(labels):
      raise DomainError('ground truth labels must be distinct')
    object.__setattr__(self, 'labels', labels)

  @property
  def alphabet_size(self) -> int:
    return int(self.pi.size)

  @cached_property
  def index(self) -> Dict[Hashable, int]:
    return {label: x for x, label in enumerate(self.labels)}


@dataclass(frozen=True)
class PluginThreshold:
  """Smallest count the plug-in bound covers, and whether n clears 24 tau0."""

  zeta_min: float
  length_threshold: int
  length_ok: bool

  def covers(self, zeta: int) -> bool:
    return self.length_ok and zeta >= self.zeta_min


@dataclass(frozen=True)
class RiskReport:
  """
  Monte Carlo TV risk of one estimator at one sample size.

  `theory_rate` is the reference curve with every universal constant set to
  1 (see `constant_note`). `per_zeta_mae`, `expected_mass` and
  `expected_mass_se` cover zeta = 0..len - 1.
  """

  n: int
  tau: int
  zeta_bar: int
  reps: int
  tv_mean: float
  tv_se: float
  l1_mean: float
  theory_rate: float
  estimator: str = 'hybrid'
  constant_note: str = CONSTANT_NOTE
  per_zeta_mae: np.ndarray = field(default_factory=lambda: np.zeros(0))
  expected_mass: np.ndarray = field(default_factory=lambda: np.zeros(0))
  expected_mass_se: np.ndarray = field(default_factory=lambda: np.zeros(0))

  def __post_init__(self):
    if not 0.0 <= self.tv_mean <= 1.0 + 1e-12:
      raise DomainError(f'tv_mean must lie in [0, 1], got {self.tv_mean}')
    if not self.tv_se >= 0:
      raise DomainError(f'tv_se must be >= 0, got {self.tv_se}')

  def to_row(self) -> Dict[str, Any]:
    return {
      'n': self.n,
      'tau': self.tau,
      'zeta_bar': self.zeta_bar,
      'reps': self.reps,
      'tv_mean': self.tv_mean,
      'tv_se': self.tv_se,
      'l1_mean': self.l1_mean,
      'theory_rate': self.theory_rate,
    }

  def to_dict(self) -> Dict[str, Any]:
    out = self.to_row()
    out.update(
      {
        'estimator': self.estimator,
        'constant_note': self.constant_note,
        'per_zeta_mae': _floats(self.per_zeta_mae),
        'expected_mass': _floats(self.expected_mass),
        'expected_mass_se': _floats(self.expected_mass_se),
      }
    )
    return out


def _floats(values: np.ndarray) -> List[Optional[float]]:
  return [float(v) if math.isfinite(v) else None for v in values]
