import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, List, Sequence, Tuple

import numpy as np

NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class TokenSequence:
  """
  A length-n trajectory over a finite alphabet.

  `symbols` holds dense integer IDs assigned in first-appearance order;
  `tokens[i]` is the raw token behind ID `i`. Every ID in
  `range(len(tokens))` occurs at least once.
  """

  symbols: np.ndarray
  tokens: Tuple[Hashable, ...]

  def __post_init__(self):
    symbols = np.array(self.symbols, dtype=np.int64).reshape(-1)
    symbols.setflags(write=False)
    object.__setattr__(self, 'symbols', symbols)
    object.__setattr__(self, 'tokens', tuple(self.tokens))

    if symbols.size == 0:
      if self.tokens:
        raise ValueError('Empty sequence cannot carry vocabulary entries')
      return
    if symbols.min() < 0:
      raise ValueError('Symbol IDs must be nonnegative')
    if symbols.max() >= len(self.tokens):
      raise ValueError('Symbol ID without a vocabulary entry')
    if np.unique(symbols).size != len(self.tokens):
      raise ValueError('Symbol IDs must be dense (every vocabulary ID used)')

  @property
  def n(self) -> int:
    return int(self.symbols.size)

  @property
  def support_size(self) -> int:
    return len(self.tokens)

  @cached_property
  def vocab(self) -> Dict[Hashable, int]:
    """raw token -> symbol ID"""
    return {token: i for i, token in enumerate(self.tokens)}

  def raw(self) -> List[Hashable]:
    return [self.tokens[s] for s in self.symbols.tolist()]

  @classmethod
  def from_states(cls, states: Sequence[int]) -> 'TokenSequence':
    """
    Densify an integer state path. States keep their labels as raw tokens,
    IDs follow first appearance.
    """
    arr = np.asarray(states, dtype=np.int64).reshape(-1)
    if arr.size == 0:
      return cls(symbols=arr, tokens=())
    uniq, first_idx, inverse = np.unique(arr, return_index=True, return_inverse=True)
    order = np.argsort(first_idx, kind='stable')
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return cls(symbols=rank[inverse.reshape(-1)], tokens=tuple(int(u) for u in uniq[order]))


@dataclass(frozen=True)
class CountTable:
  """Occurrence counts N_x indexed by symbol ID (no zero entries by density)."""

  counts: np.ndarray
  n: int

  def __post_init__(self):
    counts = np.array(self.counts, dtype=np.int64).reshape(-1)
    counts.setflags(write=False)
    object.__setattr__(self, 'counts', counts)
    if counts.size and counts.min() < 1:
      raise ValueError('CountTable stores only positive counts')
    if int(counts.sum()) != self.n:
      raise ValueError(f'Counts sum to {int(counts.sum())}, expected n={self.n}')

  def as_dict(self) -> Dict[int, int]:
    return {i: int(c) for i, c in enumerate(self.counts)}


@dataclass(frozen=True)
class FrequencyProfile:
  """
  phi[zeta] = number of symbols with count exactly zeta, for zeta = 0..n.

  phi[0] is only meaningful when `phi0_known` is set (alphabet size given);
  otherwise it is stored as 0.
  """

  phi: np.ndarray
  phi0_known: bool = False

  def __post_init__(self):
    phi = np.array(self.phi, dtype=np.int64).reshape(-1)
    phi.setflags(write=False)
    object.__setattr__(self, 'phi', phi)
    if phi.size == 0:
      raise ValueError('Frequency profile needs at least the zeta=0 entry')
    if phi.min() < 0:
      raise ValueError('Frequency profile entries must be >= 0')
    if not self.phi0_known and phi[0] != 0:
      raise ValueError('phi[0] must be 0 when the alphabet size is unknown')
    n = phi.size - 1
    if int(np.dot(np.arange(n + 1), phi)) != n:
      raise ValueError('sum of zeta * phi_zeta must equal n')

  @property
  def n(self) -> int:
    return int(self.phi.size - 1)

  @property
  def distinct(self) -> int:
    return int(self.phi[1:].sum())


@dataclass(frozen=True)
class CountMassVector:
  """Nonnegative vector indexed by count zeta = 0..n."""

  mass: np.ndarray
  normalized: bool = False

  def __post_init__(self):
    mass = np.array(self.mass, dtype=np.float64).reshape(-1)
    mass.setflags(write=False)
    object.__setattr__(self, 'mass', mass)
    if mass.size == 0:
      raise ValueError('Count mass vector needs at least one entry')
    if not np.all(np.isfinite(mass)) or mass.min() < 0:
      raise ValueError('Count mass entries must be finite and >= 0')
    if self.normalized and abs(math.fsum(mass) - 1.0) > NORMALIZATION_TOL:
      raise ValueError(f'Normalized vector sums to {math.fsum(mass)!r}')

  @property
  def n(self) -> int:
    return int(self.mass.size - 1)

  def total(self) -> float:
    return math.fsum(self.mass)

  def to_list(self) -> List[float]:
    return [float(v) for v in self.mass]
