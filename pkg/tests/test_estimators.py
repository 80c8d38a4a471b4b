import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stationary_mass.errors import DomainError, IndexOutOfRangeError, InconsistentAlphabetError
from stationary_mass.estimators import (
  HybridConfig,
  default_transition_point,
  hybrid_estimate,
  integer_cube_root,
  leave_window_count,
  natural_from_count_mass,
  plugin_counts,
  plugin_vector,
  wingit_counts,
  wingit_skipped,
  wingit_vector,
  wingit_vector_naive,
)
from stationary_mass.estimators import hybrid as hybrid_module
from stationary_mass.seqcore import CountMassVector, TokenSequence, frequency_profile, ingest_tokens, occurrence_counts
from stationary_mass.seqcore.helpers import tv_distance

# Running tests: pytest tests/test_estimators.py

sequences = st.lists(st.integers(0, 5), min_size=1, max_size=60).map(TokenSequence.from_states)


def test_leave_window_count(abac):
  assert leave_window_count(abac, 1, 2) == 1
  assert leave_window_count(abac, 2, 2) == 0
  for i in range(1, 5):
    assert leave_window_count(abac, i, 4) == 0


def test_leave_window_count_index_range(abac):
  with pytest.raises(IndexOutOfRangeError):
    leave_window_count(abac, 0, 1)
  with pytest.raises(IndexOutOfRangeError):
    leave_window_count(abac, 5, 1)
  with pytest.raises(DomainError):
    leave_window_count(abac, 1, 0)


def test_wingit_vector_examples(abac):
  assert wingit_vector(ingest_tokens('abab'), 1).to_list() == [0.0, 1.0, 0.0, 0.0, 0.0]
  assert wingit_vector(abac, 1).mass[0] == 0.5
  assert wingit_vector(abac, 2).to_list() == [0.5, 0.5, 0.0, 0.0, 0.0]


def test_wingit_vector_zeta_max(abac):
  assert wingit_vector(abac, 1, zeta_max=0).to_list() == [0.5, 0.0, 0.0, 0.0, 0.0]
  with pytest.raises(DomainError):
    wingit_vector(abac, 1, zeta_max=5)


def test_wingit_tau_range(abac):
  with pytest.raises(DomainError):
    wingit_vector(abac, 0)
  with pytest.raises(DomainError):
    wingit_vector(abac, 5)


def test_wingit_matches_naive_on_all_short_sequences():
  for length in range(1, 9):
    for path in itertools.product(range(3), repeat=length):
      seq = TokenSequence.from_states(path)
      for tau in (1, 2, 3):
        if tau > length:
          continue
        assert np.array_equal(wingit_vector(seq, tau).mass, wingit_vector_naive(seq, tau).mass)


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(sequences)
def test_good_turing_reduction(seq):
  n = seq.n
  phi = frequency_profile(occurrence_counts(seq)).phi
  vector = wingit_vector(seq, 1).mass
  for zeta in range(n + 1):
    expected = (zeta + 1) * phi[zeta + 1] / n if zeta < n else 0.0
    assert vector[zeta] == expected


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(sequences, st.integers(1, 60))
def test_simplex_identities(seq, tau):
  tau = min(tau, seq.n)
  assert int(wingit_counts(seq, tau).sum()) == seq.n
  assert int(plugin_counts(seq).sum()) == seq.n
  assert math.fsum(wingit_vector(seq, tau).mass) == pytest.approx(1.0, abs=1e-12)
  assert math.fsum(plugin_vector(seq).mass) == pytest.approx(1.0, abs=1e-12)

  zeta_bar = min(default_transition_point(seq.n), seq.n)
  estimate = hybrid_estimate(seq, HybridConfig(tau=tau, zeta_bar=zeta_bar))
  assert estimate.mass.normalized
  assert estimate.mass.mass.min() >= 0
  assert abs(math.fsum(estimate.mass.mass) - 1.0) <= 1e-12


def test_skipped_examples(abac):
  assert wingit_skipped(abac, 1, 0, 0) == 1.0
  assert wingit_skipped(abac, 1, 1, 0) == 0.0


def test_skipped_needs_divisibility(abac):
  with pytest.raises(DomainError):
    wingit_skipped(ingest_tokens('abcab'), 1, 0, 0)
  with pytest.raises(DomainError):
    wingit_skipped(abac, 1, 2, 0)
  with pytest.raises(DomainError):
    wingit_skipped(abac, 4, 0, 0)


@given(st.integers(1, 4), st.integers(1, 6), st.data())
def test_skipped_average_equals_wingit(tau, blocks, data):
  n = 2 * tau * blocks
  path = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
  seq = TokenSequence.from_states(path)
  counts = wingit_counts(seq, tau)
  for zeta in range(n + 1):
    hits = sum(wingit_skipped(seq, tau, offset, zeta) * blocks for offset in range(2 * tau))
    assert round(hits) == counts[zeta]


def test_plugin_vector(abac):
  assert plugin_vector(abac).to_list() == [0.0, 0.5, 0.5, 0.0, 0.0]
  assert plugin_vector(ingest_tokens('aaaa')).to_list() == [0.0, 0.0, 0.0, 0.0, 1.0]
  with pytest.raises(DomainError):
    plugin_vector(ingest_tokens([]))


def test_hybrid_example(abac):
  estimate = hybrid_estimate(abac, HybridConfig(tau=1, zeta_bar=0))
  assert estimate.unnormalized.to_list()[:3] == [0.5, 0.5, 0.5]
  assert estimate.nu == 1.5
  assert estimate.mass.mass.tolist() == pytest.approx([1 / 3, 1 / 3, 1 / 3, 0.0, 0.0], abs=1e-15)
  assert not estimate.fallback
  assert estimate.to_dict()['nu'] == 1.5


def test_hybrid_full_wingit_has_unit_nu(abac):
  estimate = hybrid_estimate(abac, HybridConfig(tau=1, zeta_bar=4))
  assert estimate.nu == 1.0


def test_hybrid_fallback(abac, monkeypatch):
  monkeypatch.setattr(hybrid_module, 'wingit_counts', lambda seq, tau: np.zeros(seq.n + 1, dtype=np.int64))
  # zeta_bar = n takes every entry from the zeroed WingIt counts
  estimate = hybrid_estimate(abac, HybridConfig(tau=1, zeta_bar=4))
  assert estimate.fallback
  assert estimate.nu == 0.0
  assert estimate.mass.to_list() == plugin_vector(abac).to_list()


def test_hybrid_config_validation(abac):
  with pytest.raises(DomainError):
    hybrid_estimate(abac, HybridConfig(tau=0, zeta_bar=0))
  with pytest.raises(DomainError):
    hybrid_estimate(abac, HybridConfig(tau=1, zeta_bar=5))


@pytest.mark.parametrize('n, expected', [(1, 0), (4, 0), (8, 1), (27, 2), (1000, 9), (999, 8), (10**6, 99)])
def test_default_transition_point(n, expected):
  assert default_transition_point(n) == expected


def test_integer_cube_root_is_exact():
  for k in range(0, 2000, 7):
    assert integer_cube_root(k**3) == k
    if k:
      assert integer_cube_root(k**3 - 1) == k - 1


def test_natural_examples(abac):
  estimate = CountMassVector(mass=[1 / 3, 1 / 3, 1 / 3, 0, 0], normalized=True)
  q = natural_from_count_mass(estimate, abac, alphabet_size=4)
  assert q.observed.tolist() == pytest.approx([1 / 3, 1 / 6, 1 / 6])
  assert q.unseen_count == 1
  assert q.unseen_each == pytest.approx(1 / 3)
  assert q.orphan_mass == 0.0

  lump = natural_from_count_mass(estimate, abac)
  assert not lump.alphabet_known
  assert lump.unseen_lump == pytest.approx(1 / 3)
  assert lump.observed.tolist() == pytest.approx([1 / 3, 1 / 6, 1 / 6])


def test_natural_all_distinct():
  seq = ingest_tokens('abcd')
  q = natural_from_count_mass(CountMassVector(mass=[0, 1, 0, 0, 0], normalized=True), seq)
  assert q.observed.tolist() == [0.25, 0.25, 0.25, 0.25]
  assert q.unseen_lump == 0.0


def test_natural_inconsistent_alphabet(abac):
  with pytest.raises(InconsistentAlphabetError):
    natural_from_count_mass(plugin_vector_normalized(abac), abac, alphabet_size=2)


def test_natural_redistributes_orphan_mass():
  seq = ingest_tokens('aa')
  # tau = 1 puts all mass at zeta = 1, where no symbol sits
  estimate = hybrid_estimate(seq, HybridConfig(tau=1, zeta_bar=2))
  assert estimate.mass.to_list() == [0.0, 1.0, 0.0]
  q = natural_from_count_mass(estimate.mass, seq, alphabet_size=3)
  assert q.orphan_mass == 1.0
  assert q.observed.tolist() == [1.0]
  assert q.unseen_each == 0.0


def test_natural_requires_normalized(abac):
  with pytest.raises(DomainError):
    natural_from_count_mass(CountMassVector(mass=[0.5, 0.5, 0.5, 0, 0]), abac)


def plugin_vector_normalized(seq):
  return CountMassVector(mass=plugin_vector(seq).mass, normalized=True)


def _natural_count_mass(seq, q):
  """Count mass vector implied by a natural distribution: class mass = sum over its symbols."""
  counts = occurrence_counts(seq).counts
  mass = np.zeros(seq.n + 1)
  np.add.at(mass, counts, q.observed)
  mass[0] = q.unseen_total()
  return mass


@st.composite
def supported_mass(draw, seq, alphabet_size):
  """Random normalized count mass vector living on count classes that have symbols."""
  phi = frequency_profile(occurrence_counts(seq), alphabet_size).phi
  weights = [draw(st.integers(0, 20)) if phi[z] > 0 else 0 for z in range(seq.n + 1)]
  if sum(weights) == 0:
    weights[int(np.flatnonzero(phi)[-1])] = 1
  total = sum(weights)
  return CountMassVector(mass=np.asarray(weights, dtype=np.float64) / total, normalized=True)


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=30), st.integers(0, 3), st.data())
def test_natural_pairs_preserve_tv(path, extra, data):
  seq = TokenSequence.from_states(path)
  alphabet_size = seq.support_size + extra
  first = data.draw(supported_mass(seq, alphabet_size))
  second = data.draw(supported_mass(seq, alphabet_size))
  q1 = natural_from_count_mass(first, seq, alphabet_size)
  q2 = natural_from_count_mass(second, seq, alphabet_size)

  assert q1.orphan_mass == 0.0
  assert tv_distance(q1.as_vector(), q2.as_vector()) == pytest.approx(tv_distance(first, second), abs=1e-12)
  assert _natural_count_mass(seq, q1) == pytest.approx(first.mass, abs=1e-12)

  # equal counts carry equal mass
  counts = occurrence_counts(seq).counts
  for count in set(counts.tolist()):
    masses = q1.observed[counts == count]
    assert np.all(masses == masses[0])
