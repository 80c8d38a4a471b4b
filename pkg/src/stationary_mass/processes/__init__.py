"""Seeded simulators for mixing processes and mixing-time utilities."""

from stationary_mass.processes.type import DuplicationModel, HmmModel, IidModel, MarkovModel, ProcessModel
from stationary_mass.processes.markov import is_primitive, stationary_distribution, tv_mixing_proxy
from stationary_mass.processes.mixing import (
  default_window,
  markov_mixing_proxy,
  mixing_time_from_rate,
  model_mixing_time,
)
from stationary_mass.processes.sampler import (
  derive_stream,
  sample_states,
  sample_trajectory,
  seed_stream,
  sequence_probability,
)
from stationary_mass.processes.model_builder import ModelBuilder, ModelSpec

__all__ = [
  'DuplicationModel',
  'HmmModel',
  'IidModel',
  'MarkovModel',
  'ModelBuilder',
  'ModelSpec',
  'ProcessModel',
  'default_window',
  'derive_stream',
  'is_primitive',
  'markov_mixing_proxy',
  'mixing_time_from_rate',
  'model_mixing_time',
  'sample_states',
  'sample_trajectory',
  'seed_stream',
  'sequence_probability',
  'stationary_distribution',
  'tv_mixing_proxy',
]
