from dataclasses import dataclass
from pathlib import Path


@dataclass
class MassConfig:
  name: str = 'stationary-mass'
  log_level: str = 'info'
  workers: int = 1
  breakdown_cap_factor: int = 3
  log_retention_days: int = 30
  workspace_dir: Path = Path(__file__).parent.parent.parent.parent

  @property
  def log_dir(self) -> Path:
    d = self.workspace_dir / 'cache' / self.name / 'logs'
    d.mkdir(parents=True, exist_ok=True)
    return d
