import numpy as np

from stationary_mass.errors import DomainError
from stationary_mass.seqcore.helpers import frequency_profile, occurrence_counts
from stationary_mass.seqcore.type import CountMassVector, TokenSequence


def plugin_counts(seq: TokenSequence) -> np.ndarray:
  """Integer numerators zeta * phi_zeta; they sum to n."""
  phi = frequency_profile(occurrence_counts(seq)).phi
  return np.arange(phi.size, dtype=np.int64) * phi


def plugin_vector(seq: TokenSequence) -> CountMassVector:
  """Plug-in (empirical) estimator, entry zeta = phi_zeta * zeta / n."""
  if seq.n == 0:
    raise DomainError('plug-in estimator needs a non-empty sequence')
  return CountMassVector(mass=plugin_counts(seq) / seq.n, normalized=False)
