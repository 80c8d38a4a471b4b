import logging
import math

from stationary_mass.errors import DomainError, ModelError
from stationary_mass.processes.markov import tv_mixing_proxy
from stationary_mass.processes.type import DuplicationModel, HmmModel, IidModel, MarkovModel, ProcessModel

logger = logging.getLogger(__name__)

# keeps exact ratios such as log(4)/log(2) from rounding up to the next integer
_CEIL_SLACK = 1e-12


def mixing_time_from_rate(mu: float, rho: float, eps: float) -> int:
  """
  Mixing-time bound for alpha(tau) <= mu * rho**tau:
  max(1, ceil(log(mu/eps) / log(1/rho))).
  """
  if not mu > 0:
    raise DomainError(f'mu must be > 0, got {mu}')
  if not 0 < rho < 1:
    raise DomainError(f'rho must lie in (0, 1), got {rho}')
  if not 0 < eps <= 1:
    raise DomainError(f'eps must lie in (0, 1], got {eps}')
  bound = math.log(mu / eps) / math.log(1.0 / rho)
  return max(1, math.ceil(bound - _CEIL_SLACK))


def markov_mixing_proxy(model: MarkovModel, eps: float) -> int:
  """
  Smallest tau with max_x d_TV(P^tau(x, .), pi) <= eps.

  A computable stand-in for the alpha-mixing time of a stationary chain,
  not alpha itself.
  """
  return tv_mixing_proxy(model.P, model.pi, eps)


def model_mixing_time(model: ProcessModel, eps: float) -> int:
  """
  Mixing-time oracle: the declared (mu, rho) rate when present, otherwise
  1 for IID, k for duplication, and the TV proxy for Markov chains and the
  latent chain of an HMM.
  """
  if model.has_rate:
    return mixing_time_from_rate(model.mu, model.rho, eps)
  if isinstance(model, IidModel):
    return 1
  if isinstance(model, DuplicationModel):
    return model.k
  if isinstance(model, MarkovModel):
    return markov_mixing_proxy(model, eps)
  if isinstance(model, HmmModel):
    return markov_mixing_proxy(model.latent, eps)
  raise ModelError(f'no mixing-time oracle for model of type {type(model).__name__}')


def default_window(model: ProcessModel, n: int) -> int:
  """Window size tau = t_mix(n^-5), clamped to [1, n]."""
  if n < 1:
    raise DomainError(f'n must be >= 1, got {n}')
  eps = float(n) ** -5
  tau = min(max(1, model_mixing_time(model, eps)), n)
  logger.debug(f'default window for {model.kind} model at n={n}: tau={tau}')
  return tau
