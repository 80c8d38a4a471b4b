import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stationary_mass.errors import DomainError, InconsistentAlphabetError
from stationary_mass.estimators import HybridConfig, hybrid_estimate, natural_from_count_mass, plugin_vector
from stationary_mass.evaluation import (
  CONSTANT_NOTE,
  GroundTruth,
  exact_tv_risk,
  expected_count_mass,
  natural_to_law,
  oracle_natural,
  plugin_bound_threshold,
  plugin_error_bound,
  resolve_config,
  theorem1_rate,
  true_count_mass,
  tv_risk_monte_carlo,
  wingit_error_bound,
)
from stationary_mass.processes import (
  DuplicationModel,
  HmmModel,
  IidModel,
  MarkovModel,
  derive_stream,
  markov_mixing_proxy,
  sample_states,
)
from stationary_mass.seqcore import TokenSequence, frequency_profile, ingest_tokens, occurrence_counts
from stationary_mass.seqcore.helpers import l1_distance, tv_distance

# Running tests: pytest tests/test_evaluation.py
# Skip the long Monte Carlo checks: pytest -m "not slow"

UNIFORM_ABCD = GroundTruth(pi=[0.25, 0.25, 0.25, 0.25], labels=('a', 'b', 'c', 'd'))

SUITE = [
  IidModel(pi=[0.4, 0.3, 0.2, 0.1]),
  MarkovModel(P=[[0.8, 0.1, 0.1], [0.2, 0.7, 0.1], [0.1, 0.3, 0.6]]),
  HmmModel(latent=MarkovModel(P=[[0.9, 0.1], [0.2, 0.8]]), emission=[[0.5, 0.3, 0.2, 0.0], [0.0, 0.1, 0.3, 0.6]]),
  DuplicationModel(base=[0.5, 0.25, 0.125, 0.125], k=3, alpha_dup=0.5),
]


def test_true_count_mass_example(abac):
  assert true_count_mass(UNIFORM_ABCD, abac).to_list() == [0.25, 0.5, 0.25, 0.0, 0.0]


def test_true_count_mass_full_coverage():
  gt = GroundTruth(pi=[0.1, 0.2, 0.7], labels=('x', 'y', 'z'))
  mass = true_count_mass(gt, ingest_tokens(['z', 'x', 'y']))
  assert mass.mass[1] == pytest.approx(1.0, abs=1e-15)
  assert mass.mass[0] == 0.0


def test_true_count_mass_rejects_unknown_symbol():
  with pytest.raises(InconsistentAlphabetError):
    true_count_mass(UNIFORM_ABCD, ingest_tokens(['a', 'e']))


@settings(max_examples=300)
@given(st.lists(st.floats(0.01, 1.0), min_size=1, max_size=8), st.data())
def test_true_count_mass_sums_to_one(weights, data):
  pi = np.asarray(weights) / math.fsum(weights)
  pi = pi / pi.sum()
  path = data.draw(st.lists(st.integers(0, len(weights) - 1), min_size=1, max_size=40))
  mass = true_count_mass(GroundTruth(pi=pi), TokenSequence.from_states(path))
  assert abs(mass.total() - 1.0) <= 1e-12


def test_oracle_natural_uniform(abac):
  q = oracle_natural(UNIFORM_ABCD, abac)
  law = natural_to_law(q, abac, UNIFORM_ABCD)
  assert law.tolist() == pytest.approx([0.25, 0.25, 0.25, 0.25], abs=1e-15)
  assert tv_distance(law, UNIFORM_ABCD.pi) == pytest.approx(0.0, abs=1e-15)


def test_oracle_natural_splits_classes_evenly(abac):
  gt = GroundTruth(pi=[0.4, 0.1, 0.3, 0.2], labels=('a', 'b', 'c', 'd'))
  law = natural_to_law(oracle_natural(gt, abac), abac, gt)
  assert law[1] == pytest.approx(0.2)
  assert law[2] == pytest.approx(0.2)
  assert law[0] == pytest.approx(0.4)
  assert law[3] == pytest.approx(0.2)


def test_natural_to_law_needs_known_alphabet(abac):
  lump = natural_from_count_mass(true_count_mass(UNIFORM_ABCD, abac), abac)
  with pytest.raises(InconsistentAlphabetError):
    natural_to_law(lump, abac, UNIFORM_ABCD)


def _instances(model, n, reps, seed):
  gt = GroundTruth(pi=model.stationary_law())
  cfg = resolve_config(model, n)
  for r in range(reps):
    seq = TokenSequence.from_states(sample_states(model, n, derive_stream(seed, r)))
    yield gt, seq, hybrid_estimate(seq, cfg)


@pytest.mark.slow
@pytest.mark.parametrize('model', SUITE, ids=['iid', 'markov', 'hmm', 'duplication'])
def test_surrogate_oracle_inequality(model):
  for gt, seq, estimate in _instances(model, n=150, reps=2500, seed=31):
    truth = true_count_mass(gt, seq)
    q_hat = natural_to_law(natural_from_count_mass(estimate.mass, seq, gt.alphabet_size), seq, gt)
    q_oracle = natural_to_law(oracle_natural(gt, seq), seq, gt)
    lhs = tv_distance(gt.pi, q_hat)
    rhs = 2 * tv_distance(gt.pi, q_oracle) + tv_distance(estimate.mass, truth)
    assert lhs <= rhs + 1e-12


@pytest.mark.slow
@pytest.mark.parametrize('model', SUITE, ids=['iid', 'markov', 'hmm', 'duplication'])
def test_normalization_costs_at_most_the_unnormalized_l1(model):
  for gt, seq, estimate in _instances(model, n=150, reps=2500, seed=32):
    truth = true_count_mass(gt, seq)
    assert tv_distance(estimate.mass, truth) <= l1_distance(estimate.unnormalized, truth) + 1e-12


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(st.lists(st.floats(0.01, 1.0), min_size=2, max_size=6), st.data())
def test_natural_tv_equals_count_mass_tv(weights, data):
  pi = np.asarray(weights) / math.fsum(weights)
  pi = pi / pi.sum()
  gt = GroundTruth(pi=pi)
  path = data.draw(st.lists(st.integers(0, len(weights) - 1), min_size=1, max_size=30))
  seq = TokenSequence.from_states(path)
  tau = data.draw(st.integers(1, seq.n))
  zeta_bar = data.draw(st.integers(0, seq.n))
  estimate = hybrid_estimate(seq, HybridConfig(tau=tau, zeta_bar=zeta_bar))
  q_hat = natural_from_count_mass(estimate.mass, seq, gt.alphabet_size)
  if q_hat.orphan_mass > 0:
    return
  truth = true_count_mass(gt, seq)
  q_oracle = oracle_natural(gt, seq)
  lhs = tv_distance(natural_to_law(q_hat, seq, gt), natural_to_law(q_oracle, seq, gt))
  assert lhs == pytest.approx(tv_distance(estimate.mass, truth), abs=1e-12)


def test_risk_degenerate_model_is_zero():
  report = tv_risk_monte_carlo(IidModel(pi=[1.0]), n=20, reps=5, seed=1, estimator='plugin')
  assert report.tv_mean == 0.0
  assert report.tv_se == 0.0
  assert report.constant_note == CONSTANT_NOTE


def test_risk_is_deterministic(sticky_chain):
  first = tv_risk_monte_carlo(sticky_chain, n=200, reps=20, seed=9)
  second = tv_risk_monte_carlo(sticky_chain, n=200, reps=20, seed=9)
  threaded = tv_risk_monte_carlo(sticky_chain, n=200, reps=20, seed=9, workers=3)
  assert first.to_dict() == second.to_dict()
  assert threaded.to_dict() == first.to_dict()
  assert first.tau == markov_mixing_proxy(sticky_chain, 200.0**-5)
  assert first.zeta_bar == 4


def test_risk_report_breakdown(fair_coin):
  report = tv_risk_monte_carlo(fair_coin, n=1000, reps=4, seed=2, estimator='wingit')
  assert report.tau == 1
  assert report.zeta_bar == 9
  assert report.per_zeta_mae.size == 28
  assert report.expected_mass.size == 28
  assert list(report.to_row()) == ['n', 'tau', 'zeta_bar', 'reps', 'tv_mean', 'tv_se', 'l1_mean', 'theory_rate']

  full = tv_risk_monte_carlo(fair_coin, n=50, reps=2, seed=2, full_breakdown=True)
  assert full.per_zeta_mae.size == 51


def test_risk_rejects_unknown_estimator(fair_coin):
  with pytest.raises(DomainError):
    tv_risk_monte_carlo(fair_coin, n=10, reps=1, seed=1, estimator='laplace')


def test_exact_risk_two_state_n3():
  # aaa-type paths: TV 1/2 (2 of 8); two-symbol paths: TV 1/6 (6 of 8)
  chain = MarkovModel(P=[[0.5, 0.5], [0.5, 0.5]])
  assert exact_tv_risk(chain, 3, estimator='plugin') == pytest.approx(0.25, abs=1e-12)


def test_exact_risk_limit():
  with pytest.raises(DomainError):
    exact_tv_risk(IidModel(pi=[0.25] * 4), 11)


@pytest.mark.slow
def test_monte_carlo_matches_exact_risk_two_state():
  chain = MarkovModel(P=[[0.5, 0.5], [0.5, 0.5]])
  report = tv_risk_monte_carlo(chain, n=3, reps=100_000, seed=12345, estimator='plugin')
  assert abs(report.tv_mean - exact_tv_risk(chain, 3, estimator='plugin')) <= 3 * report.tv_se


@pytest.mark.slow
@pytest.mark.parametrize(
  'model, n, estimator, tau, zeta_bar',
  [
    (MarkovModel(P=[[0.6, 0.3, 0.1], [0.2, 0.5, 0.3], [0.3, 0.3, 0.4]]), 5, 'hybrid', 2, 1),
    (HmmModel(latent=MarkovModel(P=[[0.9, 0.1], [0.3, 0.7]]), emission=[[0.8, 0.2], [0.1, 0.9]]), 6, 'wingit', 2, 6),
    (DuplicationModel(base=[0.5, 0.3, 0.2], k=2, alpha_dup=0.5), 4, 'hybrid', 2, 1),
  ],
  ids=['markov3', 'hmm', 'duplication'],
)
def test_monte_carlo_matches_exhaustive_oracle(model, n, estimator, tau, zeta_bar):
  exact = exact_tv_risk(model, n, estimator=estimator, tau=tau, zeta_bar=zeta_bar)
  report = tv_risk_monte_carlo(model, n=n, reps=5000, seed=4242, estimator=estimator, tau=tau, zeta_bar=zeta_bar)
  assert abs(report.tv_mean - exact) <= 3 * report.tv_se + 1e-12


def test_expected_count_mass(sticky_chain):
  mean, se = expected_count_mass(sticky_chain, n=30, reps=50, seed=3)
  assert mean.size == 31
  assert se.size == 31
  assert math.fsum(mean) == pytest.approx(1.0, abs=1e-12)
  assert np.all(se >= 0)
  short, _ = expected_count_mass(sticky_chain, n=30, reps=50, seed=3, length=5)
  assert short == pytest.approx(mean[:5], abs=1e-15)


def test_theorem1_rate():
  assert theorem1_rate(10**6, 1) == pytest.approx(math.sqrt(math.log(10**6)) / 10, abs=1e-12)
  assert theorem1_rate(10**6, 1) == pytest.approx(0.37169, abs=1e-4)
  assert theorem1_rate(1000, 4) == pytest.approx(2 * theorem1_rate(1000, 1), rel=1e-12)
  assert theorem1_rate(2, 1) == pytest.approx(0.7417, abs=1e-4)
  with pytest.raises(DomainError):
    theorem1_rate(1, 1)


def test_plugin_error_bound():
  assert plugin_error_bound(100, 1, 10**4, 1, 0.1) == pytest.approx(3.393e-3, abs=1e-5)
  assert plugin_error_bound(100, 1, 10**4, 0, 0.1) == 0.0
  assert plugin_error_bound(400, 1, 10**4, 1, 0.1) == pytest.approx(2 * plugin_error_bound(100, 1, 10**4, 1, 0.1))
  with pytest.raises(DomainError):
    plugin_error_bound(0, 1, 10**4, 1, 0.1)


def test_plugin_bound_threshold():
  threshold = plugin_bound_threshold(1, 1000, 0.1)
  assert threshold.zeta_min == pytest.approx(36 * math.log(220000))
  assert threshold.length_threshold == 24
  assert threshold.covers(443)
  assert not threshold.covers(442)
  assert not plugin_bound_threshold(50, 1000, 0.1).length_ok


def test_wingit_error_bound():
  assert wingit_error_bound(0, 1, 100, [0.1, 0.2, 0.1]) == pytest.approx(0.09640, abs=1e-4)
  assert wingit_error_bound(3, 2, 100, [0.0] * 7) == pytest.approx(4 * 2 / 100)
  em = [0.3, 0.2, 0.15]
  missing_mass_form = math.sqrt(1 / 50) * (math.sqrt(em[0]) + math.sqrt(em[1] + em[2])) + 1 / 50
  assert wingit_error_bound(0, 1, 50, em) == pytest.approx(missing_mass_form, rel=1e-12)
  with pytest.raises(DomainError):
    wingit_error_bound(0, 2, 100, [0.1, 0.1])
  with pytest.raises(DomainError):
    wingit_error_bound(0, 1, 100, [0.1, 1.5, 0.1])


@pytest.mark.slow
def test_plugin_bound_holds_above_threshold():
  model = MarkovModel(P=[[0.7, 0.3], [0.3, 0.7]])
  n, delta, eps = 50000, 0.1, 0.01
  tau0 = markov_mixing_proxy(model, eps / n**2)
  threshold = plugin_bound_threshold(tau0, n, delta)
  gt = GroundTruth(pi=model.stationary_law())
  reps = 20
  held = 0
  for r in range(reps):
    seq = TokenSequence.from_states(sample_states(model, n, derive_stream(2718, r)))
    truth = true_count_mass(gt, seq).mass
    estimate = plugin_vector(seq).mass
    phi = frequency_profile(occurrence_counts(seq)).phi
    covered = [zeta for zeta in np.flatnonzero(phi).tolist() if threshold.covers(zeta)]
    assert covered
    if all(abs(truth[z] - estimate[z]) <= plugin_error_bound(z, tau0, n, int(phi[z]), delta) for z in covered):
      held += 1
  assert held / reps >= 1 - delta - 3 * eps


@pytest.mark.slow
def test_hybrid_risk_rate_shape():
  model = IidModel(pi=np.full(100, 0.01))
  grid = [10**3, 10**4, 10**5]
  risks = [tv_risk_monte_carlo(model, n=n, reps=200, seed=606).tv_mean for n in grid]
  assert risks[0] > risks[1] > risks[2]
  slope = np.polyfit(np.log(grid), np.log(risks), 1)[0]
  assert slope <= -1 / 6 + 0.05
