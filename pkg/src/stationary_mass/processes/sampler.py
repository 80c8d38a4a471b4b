"""
Seeded trajectory sampling.

Streams are numpy Philox generators (counter-based, 64-bit keyed) built
from a SeedSequence, so a (seed, replication) pair always maps to the same
independent stream.
"""

from bisect import bisect_right
from typing import Sequence

import numpy as np

from stationary_mass.errors import DomainError, ModelError
from stationary_mass.processes.type import DuplicationModel, HmmModel, IidModel, MarkovModel, ProcessModel
from stationary_mass.seqcore.type import TokenSequence


def _check_seed(seed: int) -> int:
  if int(seed) != seed or seed < 0 or seed >= 2**64:
    raise DomainError(f'seed must be an unsigned 64-bit integer, got {seed}')
  return int(seed)


def seed_stream(seed: int) -> np.random.Generator:
  return np.random.Generator(np.random.Philox(np.random.SeedSequence(_check_seed(seed))))


def derive_stream(seed: int, replication: int) -> np.random.Generator:
  """Independent stream for Monte Carlo replication `replication` under `seed`."""
  if replication < 0:
    raise DomainError(f'replication index must be >= 0, got {replication}')
  return np.random.Generator(np.random.Philox(np.random.SeedSequence([_check_seed(seed), int(replication)])))


def _cdf(weights: np.ndarray) -> np.ndarray:
  """Cumulative sums, pinned to 1 from the last positive weight on."""
  cdf = np.cumsum(weights, dtype=np.float64)
  top = int(np.searchsorted(cdf, cdf[-1], side='left'))
  cdf[top:] = 1.0
  return cdf


def _draw(cdf: np.ndarray, u: np.ndarray) -> np.ndarray:
  """Inverse-cdf draw for u in [0, 1); zero-weight states are never returned."""
  return np.searchsorted(cdf, u, side='right')


def _sample_chain(P: np.ndarray, pi: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
  rows = [_cdf(row).tolist() for row in P]
  u = rng.random(n).tolist()
  states = np.empty(n, dtype=np.int64)
  s = int(_draw(_cdf(pi), np.asarray([u[0]]))[0])
  states[0] = s
  for t in range(1, n):
    s = bisect_right(rows[s], u[t])
    states[t] = s
  return states


def sample_states(model: ProcessModel, n: int, rng: np.random.Generator) -> np.ndarray:
  """
  State path of length n, started at stationarity.

  Args:
      model: process to simulate
      n: trajectory length, n >= 1
      rng: numpy Generator (see seed_stream / derive_stream)

  Returns:
      int64 array of state labels 0..alphabet_size-1
  """
  if n < 1:
    raise DomainError(f'trajectory length must be >= 1, got {n}')

  if isinstance(model, IidModel):
    return _draw(_cdf(model.pi), rng.random(n)).astype(np.int64)

  if isinstance(model, MarkovModel):
    return _sample_chain(model.P, model.pi, n, rng)

  if isinstance(model, HmmModel):
    latent = _sample_chain(model.latent.P, model.latent.pi, n, rng)
    u = rng.random(n)
    observed = np.empty(n, dtype=np.int64)
    cdfs = [_cdf(row) for row in model.emission]
    for h in range(model.latent.states):
      at = latent == h
      if at.any():
        observed[at] = _draw(cdfs[h], u[at])
    return observed

  if isinstance(model, DuplicationModel):
    # every input draw emits at least one symbol, so n draws always suffice
    base = _draw(_cdf(model.base), rng.random(n))
    duplicated = rng.random(n) < model.alpha_dup
    lengths = np.where(duplicated, model.k, 1)
    return np.repeat(base, lengths)[:n].astype(np.int64)

  raise ModelError(f'cannot sample from model of type {type(model).__name__}')


def sample_trajectory(model: ProcessModel, n: int, seed: int) -> TokenSequence:
  """Sample a trajectory fully determined by (model, n, seed)."""
  return TokenSequence.from_states(sample_states(model, n, seed_stream(seed)))


def sequence_probability(model: ProcessModel, states: Sequence[int]) -> float:
  """
  Exact probability that the model emits exactly this state path as its
  first len(states) symbols.
  """
  x = np.asarray(states, dtype=np.int64).reshape(-1)
  n = x.size
  if n == 0:
    return 1.0
  if x.min() < 0 or x.max() >= model.alphabet_size:
    return 0.0

  if isinstance(model, IidModel):
    return float(np.prod(model.pi[x]))

  if isinstance(model, MarkovModel):
    return float(model.pi[x[0]] * np.prod(model.P[x[:-1], x[1:]]))

  if isinstance(model, HmmModel):
    # forward recursion over the latent chain
    alpha = model.latent.pi * model.emission[:, x[0]]
    for t in range(1, n):
      alpha = (alpha @ model.latent.P) * model.emission[:, x[t]]
    return float(alpha.sum())

  if isinstance(model, DuplicationModel):
    # f[t]: probability that a block starts at t after emitting x[:t]
    f = np.zeros(n + 1)
    f[0] = 1.0
    k, a = model.k, model.alpha_dup
    for t in range(n):
      if f[t] == 0.0:
        continue
      p = model.base[x[t]]
      f[t + 1] += f[t] * (1.0 - a) * p
      end = min(t + k, n)
      if np.all(x[t:end] == x[t]):
        f[end] += f[t] * a * p
    return float(f[n])

  raise ModelError(f'no path probability for model of type {type(model).__name__}')
