"""Ground-truth count masses and the oracle-aided natural estimator."""

import math

import numpy as np

from stationary_mass.errors import InconsistentAlphabetError, LengthMismatchError
from stationary_mass.estimators.natural import natural_from_count_mass
from stationary_mass.estimators.type import NaturalDistribution
from stationary_mass.evaluation.type import GroundTruth
from stationary_mass.seqcore.helpers import occurrence_counts
from stationary_mass.seqcore.type import CountMassVector, TokenSequence


def _observed_index(gt: GroundTruth, seq: TokenSequence) -> np.ndarray:
  """Ground-truth alphabet index of every observed symbol ID."""
  try:
    return np.asarray([gt.index[token] for token in seq.tokens], dtype=np.int64)
  except KeyError as e:
    raise InconsistentAlphabetError(f'observed symbol {e.args[0]!r} is outside the ground-truth alphabet') from None


def true_count_mass(gt: GroundTruth, seq: TokenSequence) -> CountMassVector:
  """
  M^pi_zeta = sum_x pi_x 1{N_x = zeta}, zeta = 0..n.

  Entry 0 carries the pi-mass of every unobserved symbol.

  Examples:
      uniform pi on {a, b, c, d}, seq (a, b, a, c) -> (0.25, 0.5, 0.25, 0, 0)
  """
  idx = _observed_index(gt, seq)
  counts = occurrence_counts(seq).counts
  mass = np.zeros(seq.n + 1)
  observed_pi = gt.pi[idx]
  np.add.at(mass, counts, observed_pi)
  unseen = np.ones(gt.alphabet_size, dtype=bool)
  unseen[idx] = False
  mass[0] = math.fsum(gt.pi[unseen])
  return CountMassVector(mass=mass, normalized=True)


def oracle_natural(gt: GroundTruth, seq: TokenSequence) -> NaturalDistribution:
  """q^pi_x = M^pi_{N_x} / phi_{N_x}: each true class mass split evenly."""
  return natural_from_count_mass(true_count_mass(gt, seq), seq, alphabet_size=gt.alphabet_size)


def natural_to_law(q: NaturalDistribution, seq: TokenSequence, gt: GroundTruth) -> np.ndarray:
  """
  Lay a natural distribution out over the ground-truth alphabet, so it can be
  compared with gt.pi entry by entry.
  """
  if not q.alphabet_known:
    raise InconsistentAlphabetError('natural distribution was built without the alphabet size')
  if q.observed.size != seq.support_size:
    raise LengthMismatchError(f'{q.observed.size} observed masses for {seq.support_size} observed symbols')
  if q.unseen_count != gt.alphabet_size - seq.support_size:
    raise InconsistentAlphabetError(
      f'{q.unseen_count} unseen symbols, ground truth implies {gt.alphabet_size - seq.support_size}'
    )
  law = np.full(gt.alphabet_size, q.unseen_each)
  law[_observed_index(gt, seq)] = q.observed
  return law
