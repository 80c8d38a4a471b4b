from dataclasses import dataclass, field
from typing import ClassVar, Optional

import numpy as np

from stationary_mass.errors import ModelError
from stationary_mass.processes.markov import (
  STATIONARY_TOL,
  check_distribution,
  check_stochastic,
  stationary_distribution,
)


def _freeze(arr: np.ndarray) -> np.ndarray:
  arr.setflags(write=False)
  return arr


@dataclass(frozen=True, eq=False, kw_only=True)
class ProcessModel:
  """
  Base for the simulated process families.

  `mu`/`rho` optionally declare an exponential mixing rate
  alpha(tau) <= mu * rho**tau; when present they drive the mixing-time oracle.
  """

  kind: ClassVar[str] = 'base'
  mu: Optional[float] = None
  rho: Optional[float] = None

  def __post_init__(self):
    if (self.mu is None) != (self.rho is None):
      raise ModelError('mu and rho must be supplied together')
    if self.mu is not None:
      if not self.mu > 0:
        raise ModelError(f'mu must be > 0, got {self.mu}')
      if not 0 < self.rho < 1:
        raise ModelError(f'rho must lie in (0, 1), got {self.rho}')

  @property
  def has_rate(self) -> bool:
    return self.mu is not None

  def stationary_law(self) -> np.ndarray:
    raise NotImplementedError('Subclasses must implement this method.')

  @property
  def alphabet_size(self) -> int:
    return int(self.stationary_law().size)


@dataclass(frozen=True, eq=False, kw_only=True)
class IidModel(ProcessModel):
  kind: ClassVar[str] = 'iid'
  pi: np.ndarray

  def __post_init__(self):
    super().__post_init__()
    object.__setattr__(self, 'pi', _freeze(check_distribution(self.pi)))

  def stationary_law(self) -> np.ndarray:
    return self.pi


@dataclass(frozen=True, eq=False, kw_only=True)
class MarkovModel(ProcessModel):
  """Ergodic chain with transition matrix P; pi is solved for when omitted."""

  kind: ClassVar[str] = 'markov'
  P: np.ndarray
  pi: Optional[np.ndarray] = None

  def __post_init__(self):
    super().__post_init__()
    P = check_stochastic(self.P)
    if self.pi is None:
      pi = stationary_distribution(P)
    else:
      pi = check_distribution(self.pi)
      if pi.size != P.shape[0]:
        raise ModelError(f'pi has {pi.size} entries but P has {P.shape[0]} states')
      residual = np.abs(pi @ P - pi).max()
      if residual > STATIONARY_TOL:
        raise ModelError(f'supplied pi is not stationary for P (residual {residual:.3e})')
    object.__setattr__(self, 'P', _freeze(P))
    object.__setattr__(self, 'pi', _freeze(pi))

  @property
  def states(self) -> int:
    return int(self.P.shape[0])

  def stationary_law(self) -> np.ndarray:
    return self.pi


@dataclass(frozen=True, eq=False, kw_only=True)
class HmmModel(ProcessModel):
  """Latent Markov chain H_t emitting X_t ~ emission[H_t, :]."""

  kind: ClassVar[str] = 'hmm'
  latent: MarkovModel
  emission: np.ndarray
  _law: np.ndarray = field(init=False, repr=False)

  def __post_init__(self):
    super().__post_init__()
    emission = check_stochastic(self.emission, name='emission', square=False)
    if emission.shape[0] != self.latent.states:
      raise ModelError(f'emission has {emission.shape[0]} rows but the latent chain has {self.latent.states} states')
    object.__setattr__(self, 'emission', _freeze(emission))
    object.__setattr__(self, '_law', _freeze(self.latent.pi @ emission))

  def stationary_law(self) -> np.ndarray:
    return self._law


@dataclass(frozen=True, eq=False, kw_only=True)
class DuplicationModel(ProcessModel):
  """
  IID draws from `base`; each draw is emitted k times with probability
  alpha_dup, once otherwise.
  """

  kind: ClassVar[str] = 'duplication'
  base: np.ndarray
  k: int
  alpha_dup: float

  def __post_init__(self):
    super().__post_init__()
    object.__setattr__(self, 'base', _freeze(check_distribution(self.base, name='base')))
    if int(self.k) != self.k or self.k < 1:
      raise ModelError(f'k must be an integer >= 1, got {self.k}')
    if not 0 <= self.alpha_dup <= 1:
      raise ModelError(f'alpha must lie in [0, 1], got {self.alpha_dup}')
    object.__setattr__(self, 'k', int(self.k))

  def stationary_law(self) -> np.ndarray:
    return self.base
