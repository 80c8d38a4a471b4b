"""Exceptions raised by stationary-mass.

Everything subclasses ValueError so callers that only know about bad
arguments keep working.
"""


class MassError(ValueError):
  """Base class for all stationary-mass errors"""


class LengthMismatchError(MassError):
  pass


class InconsistentAlphabetError(MassError):
  """Alphabet size smaller than the observed support"""


class IndexOutOfRangeError(MassError):
  pass


class DomainError(MassError):
  """A numeric parameter is outside its allowed range"""


class ModelError(MassError):
  """Invalid process model, non-ergodic chain, or unreadable model file"""


class UsageError(MassError):
  """Missing or inconsistent command-line inputs"""


class ConfigError(MassError):
  pass
