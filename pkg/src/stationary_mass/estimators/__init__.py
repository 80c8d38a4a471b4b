"""WingIt, plug-in, hybrid and natural estimators."""

from stationary_mass.estimators.type import HybridConfig, HybridEstimate, NaturalDistribution
from stationary_mass.estimators.wingit import (
  leave_window_count,
  leave_window_counts,
  wingit_counts,
  wingit_skipped,
  wingit_vector,
  wingit_vector_naive,
)
from stationary_mass.estimators.plugin import plugin_counts, plugin_vector
from stationary_mass.estimators.hybrid import (
  default_transition_point,
  hybrid_estimate,
  integer_cube_root,
)
from stationary_mass.estimators.natural import natural_from_count_mass

__all__ = [
  'HybridConfig',
  'HybridEstimate',
  'NaturalDistribution',
  'default_transition_point',
  'hybrid_estimate',
  'integer_cube_root',
  'leave_window_count',
  'leave_window_counts',
  'natural_from_count_mass',
  'plugin_counts',
  'plugin_vector',
  'wingit_counts',
  'wingit_skipped',
  'wingit_vector',
  'wingit_vector_naive',
]
