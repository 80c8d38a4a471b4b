"""Concentration radii for mixing sequences and an empirical coverage harness."""

from stationary_mass.concentration.type import (
  BernsteinInputs,
  BlockDecomposition,
  CoverageReport,
  PreconditionFailure,
  SelfNormInputs,
  SelfNormRadius,
)
from stationary_mass.concentration.bounds import (
  block_decompose,
  empirical_bernstein_radius,
  estimate_block_variance,
  mixing_bernstein_radius,
  self_normalized_radius,
)
from stationary_mass.concentration.coverage import empirical_coverage, indicator, nominal_budget

__all__ = [
  'BernsteinInputs',
  'BlockDecomposition',
  'CoverageReport',
  'PreconditionFailure',
  'SelfNormInputs',
  'SelfNormRadius',
  'block_decompose',
  'empirical_bernstein_radius',
  'empirical_coverage',
  'estimate_block_variance',
  'indicator',
  'mixing_bernstein_radius',
  'nominal_budget',
  'self_normalized_radius',
]
