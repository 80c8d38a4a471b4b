from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional, Tuple

from stationary_mass.errors import UsageError

Command = Literal['simulate', 'estimate', 'evaluate', 'sweep', 'bounds']
OutputFormat = Literal['csv', 'json']

STOCHASTIC_COMMANDS = ('simulate', 'evaluate', 'sweep', 'bounds')


def parse_auto(value: str, field: str, minimum: int = 0) -> Optional[int]:
  """'auto' -> None, otherwise an integer >= minimum."""
  if value == 'auto':
    return None
  try:
    parsed = int(value)
  except ValueError:
    raise UsageError(f'{field} must be an integer or "auto", got {value!r}') from None
  if parsed < minimum:
    raise UsageError(f'{field} must be >= {minimum}, got {parsed}')
  return parsed


def parse_grid(value: str) -> Tuple[int, ...]:
  """'1000,10000' -> (1000, 10000)"""
  try:
    grid = tuple(int(part) for part in value.split(',') if part.strip() != '')
  except ValueError:
    raise UsageError(f'--n-grid must be comma-separated integers, got {value!r}') from None
  if not grid:
    raise UsageError('--n-grid must not be empty')
  return grid


@dataclass(frozen=True)
class ExperimentSpec:
  """
  Everything one CLI invocation needs. `tau` / `zeta_bar` of None mean auto.
  """

  command: Command
  model_path: Optional[Path] = None
  tokens_path: Optional[Path] = None
  n: Optional[int] = None
  n_grid: Tuple[int, ...] = ()
  tau: Optional[int] = None
  zeta_bar: Optional[int] = None
  reps: int = 100
  seed: Optional[int] = None
  out: Optional[Path] = None
  format: Optional[OutputFormat] = None
  estimator: str = 'hybrid'
  delta: float = 0.1
  eps: float = 0.01
  workers: int = 1
  cap_factor: int = 3
  full_breakdown: bool = False

  @property
  def grid(self) -> Tuple[int, ...]:
    return self.n_grid if self.n_grid else ((self.n,) if self.n is not None else ())

  def validate(self) -> None:
    """
    Raises:
        UsageError: naming the missing or inconsistent field
    """
    if self.seed is not None and not 0 <= self.seed < 2**64:
      raise UsageError(f'--seed must be an unsigned 64-bit integer, got {self.seed}')
    if self.reps < 1:
      raise UsageError(f'--reps must be >= 1, got {self.reps}')
    if self.workers < 1:
      raise UsageError(f'workers must be >= 1, got {self.workers}')

    if self.command == 'estimate':
      self._validate_estimate()
      return

    if self.model_path is None:
      raise UsageError(f'{self.command} requires --model')
    if self.tokens_path is not None:
      raise UsageError(f'{self.command} takes --model, not --tokens')
    if self.command in STOCHASTIC_COMMANDS and self.seed is None:
      raise UsageError(f'{self.command} requires --seed')

    if self.command == 'sweep':
      if not self.n_grid:
        raise UsageError('sweep requires --n-grid')
      if any(n < 1 for n in self.n_grid):
        raise UsageError('--n-grid entries must be >= 1')
      if list(self.n_grid) != sorted(set(self.n_grid)):
        raise UsageError('--n-grid must be strictly ascending')
      self.check_window(self.n_grid[0])
      return

    if self.n is None:
      raise UsageError(f'{self.command} requires --n')
    if self.n < 1:
      raise UsageError(f'--n must be >= 1, got {self.n}')
    self.check_window(self.n)
    if self.command == 'bounds':
      if not 0 < self.delta <= 1:
        raise UsageError(f'--delta must lie in (0, 1], got {self.delta}')
      if not 0 < self.eps <= 1:
        raise UsageError(f'--eps must lie in (0, 1], got {self.eps}')

  def _validate_estimate(self) -> None:
    if self.tokens_path is not None:
      if self.model_path is not None:
        raise UsageError('estimate takes either --tokens or --model, not both')
      if self.tau is None:
        raise UsageError('--tau auto needs --model: a token file carries no mixing time')
      return
    if self.model_path is None:
      raise UsageError('estimate requires --tokens, or --model with --n and --seed')
    if self.n is None:
      raise UsageError('estimate from --model requires --n')
    if self.n < 1:
      raise UsageError(f'--n must be >= 1, got {self.n}')
    if self.seed is None:
      raise UsageError('estimate from --model requires --seed')
    self.check_window(self.n)

  def check_window(self, n: int) -> None:
    """
    Raises:
        UsageError: an explicit --tau or --zeta-bar does not fit a length-n sequence
    """
    if self.tau is not None and self.tau > n:
      raise UsageError(f'--tau must satisfy 1 <= tau <= n={n}, got {self.tau}')
    if self.zeta_bar is not None and self.zeta_bar > n:
      raise UsageError(f'--zeta-bar must satisfy 0 <= zeta_bar <= n={n}, got {self.zeta_bar}')
