import logging
import math
from typing import Optional

import numpy as np

from stationary_mass.errors import DomainError, LengthMismatchError
from stationary_mass.estimators.type import NaturalDistribution
from stationary_mass.seqcore.helpers import frequency_profile, occurrence_counts
from stationary_mass.seqcore.type import CountMassVector, TokenSequence

logger = logging.getLogger(__name__)


def _redistribute_orphans(mass: np.ndarray, supported: np.ndarray, phi: np.ndarray) -> float:
  """
  Move mass sitting on count classes without symbols onto the supported
  classes, in proportion to their own mass. Works in place; returns the
  amount moved.
  """
  orphan = math.fsum(mass[~supported])
  if orphan == 0.0:
    return 0.0
  total = math.fsum(mass)
  mass[~supported] = 0.0
  kept = math.fsum(mass)
  if kept > 0.0:
    mass *= total / kept
  else:
    # nothing to scale: spread over observed symbols by class size
    observed = phi.astype(np.float64)
    observed[0] = 0.0
    mass[:] = total * observed / observed.sum()
  logger.warning(f'redistributed orphan count mass {orphan!r} over supported classes')
  return orphan


def natural_from_count_mass(
  estimate: CountMassVector,
  seq: TokenSequence,
  alphabet_size: Optional[int] = None,
) -> NaturalDistribution:
  """
  Split each count-class mass equally among the symbols with that count.

  Args:
      estimate: normalized count mass vector of length n + 1
      seq: the observed sequence
      alphabet_size: full alphabet size if known; otherwise unseen mass is
          kept as a single lump

  Class masses on counts no symbol has (possible for WingIt entries, or for
  zeta = 0 when a known alphabet is fully observed) are redistributed, see
  `orphan_mass` on the result.
  """
  if not estimate.normalized:
    raise DomainError('natural estimator needs a normalized count mass vector')
  if estimate.n != seq.n:
    raise LengthMismatchError(f'count mass vector has n={estimate.n}, sequence has n={seq.n}')
  if seq.n == 0:
    raise DomainError('natural estimator needs a non-empty sequence')

  table = occurrence_counts(seq)
  profile = frequency_profile(table, alphabet_size)
  phi = profile.phi

  supported = phi > 0
  if not profile.phi0_known:
    supported[0] = True
  mass = np.array(estimate.mass, dtype=np.float64)
  orphan = _redistribute_orphans(mass, supported, phi)

  per_symbol = np.zeros_like(mass)
  per_symbol[phi > 0] = mass[phi > 0] / phi[phi > 0]
  observed = per_symbol[table.counts]

  if profile.phi0_known:
    return NaturalDistribution(
      observed=observed,
      unseen_count=int(phi[0]),
      unseen_each=float(per_symbol[0]),
      orphan_mass=orphan,
    )
  return NaturalDistribution(observed=observed, unseen_lump=float(mass[0]), orphan_mass=orphan)
