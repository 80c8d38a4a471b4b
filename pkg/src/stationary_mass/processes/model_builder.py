import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from stationary_mass.errors import ModelError
from stationary_mass.processes.type import DuplicationModel, HmmModel, IidModel, MarkovModel, ProcessModel

_REQUIRED = {
  'iid': ('pi',),
  'markov': ('P',),
  'hmm': ('P', 'emission'),
  'duplication': ('pi', 'k', 'alpha'),
}

_OPTIONAL = {
  'iid': (),
  'markov': ('pi',),
  'hmm': ('pi',),
  'duplication': (),
}
_ALWAYS = ('kind', 'mu', 'rho')


class ModelSpec(BaseModel):
  """
  Model spec file schema:
  {"kind": "iid|markov|hmm|duplication", "pi": [...], "P": [[...]],
   "emission": [[...]], "k": ..., "alpha": ..., "mu": ..., "rho": ...}
  Unknown fields are rejected, and so are fields the kind does not take.
  For "hmm", "pi" is the stationary law of the latent chain.
  """

  model_config = ConfigDict(extra='forbid')

  kind: Literal['iid', 'markov', 'hmm', 'duplication']
  pi: Optional[List[float]] = None
  P: Optional[List[List[float]]] = None
  emission: Optional[List[List[float]]] = None
  k: Optional[int] = None
  alpha: Optional[float] = None
  mu: Optional[float] = None
  rho: Optional[float] = None

  @model_validator(mode='after')
  def _check_fields(self):
    missing = [name for name in _REQUIRED[self.kind] if getattr(self, name) is None]
    if missing:
      raise ValueError(f"kind '{self.kind}' requires field(s): {', '.join(missing)}")
    allowed = set(_REQUIRED[self.kind]) | set(_OPTIONAL[self.kind]) | set(_ALWAYS)
    extra = [name for name in type(self).model_fields if name not in allowed and getattr(self, name) is not None]
    if extra:
      raise ValueError(f"kind '{self.kind}' does not take field(s): {', '.join(extra)}")
    return self


class ModelBuilder:
  @classmethod
  def from_spec(cls, spec: ModelSpec) -> ProcessModel:
    rate = {'mu': spec.mu, 'rho': spec.rho}
    if spec.kind == 'iid':
      return IidModel(pi=spec.pi, **rate)
    if spec.kind == 'markov':
      return MarkovModel(P=spec.P, pi=spec.pi, **rate)
    if spec.kind == 'hmm':
      latent = MarkovModel(P=spec.P, pi=spec.pi)
      return HmmModel(latent=latent, emission=spec.emission, **rate)
    return DuplicationModel(base=spec.pi, k=spec.k, alpha_dup=spec.alpha, **rate)

  @classmethod
  def from_dict(cls, data: Dict[str, Any]) -> ProcessModel:
    try:
      spec = ModelSpec.model_validate(data)
    except ValidationError as e:
      raise ModelError(f'invalid model spec: {e}') from None
    return cls.from_spec(spec)

  @classmethod
  def from_file(cls, path: Union[str, Path]) -> ProcessModel:
    try:
      with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
      raise ModelError(f'cannot read model file {path}: {e}') from None
    if not isinstance(data, dict):
      raise ModelError(f'model file {path} must contain a JSON object')
    return cls.from_dict(data)
