import os
from pathlib import Path

from dotenv import load_dotenv

from stationary_mass.config.type import MassConfig
from stationary_mass.errors import ConfigError

load_dotenv()


def _env_int(key: str, default: int) -> int:
  raw = os.getenv(key)
  if raw is None or raw == '':
    return default
  try:
    value = int(raw)
  except ValueError:
    raise ConfigError(f'{key} must be an integer, got {raw!r}') from None
  if value < 1:
    raise ConfigError(f'{key} must be >= 1, got {value}')
  return value


def load_config() -> MassConfig:
  """Build the configuration from environment variables (and .env)."""
  values = {
    'name': os.getenv('MASS_NAME', 'stationary-mass'),
    'log_level': os.getenv('MASS_LOG_LEVEL', 'info'),
    'workers': _env_int('MASS_WORKERS', 1),
    'breakdown_cap_factor': _env_int('MASS_BREAKDOWN_CAP', 3),
    'log_retention_days': _env_int('MASS_LOG_RETENTION_DAYS', 30),
  }
  workspace = os.getenv('MASS_WORKSPACE_DIR')
  if workspace:
    values['workspace_dir'] = Path(workspace)
  return MassConfig(**values)


config = load_config()
