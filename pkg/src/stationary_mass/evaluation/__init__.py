"""Ground truth, risk measurement and reference rates."""

from stationary_mass.evaluation.type import CONSTANT_NOTE, RISK_CSV_COLUMNS, GroundTruth, PluginThreshold, RiskReport
from stationary_mass.evaluation.truth import natural_to_law, oracle_natural, true_count_mass
from stationary_mass.evaluation.rates import (
  plugin_bound_threshold,
  plugin_error_bound,
  theorem1_rate,
  wingit_error_bound,
)
from stationary_mass.evaluation.risk import (
  ESTIMATORS,
  estimate_count_mass,
  exact_tv_risk,
  expected_count_mass,
  resolve_config,
  tv_risk_monte_carlo,
)

__all__ = [
  'CONSTANT_NOTE',
  'ESTIMATORS',
  'RISK_CSV_COLUMNS',
  'GroundTruth',
  'PluginThreshold',
  'RiskReport',
  'estimate_count_mass',
  'exact_tv_risk',
  'expected_count_mass',
  'natural_to_law',
  'oracle_natural',
  'plugin_bound_threshold',
  'plugin_error_bound',
  'resolve_config',
  'theorem1_rate',
  'tv_risk_monte_carlo',
  'wingit_error_bound',
]
