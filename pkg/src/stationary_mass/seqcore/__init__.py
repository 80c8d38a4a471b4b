"""Sequence ingestion, counting, frequency profiles and distances."""

from stationary_mass.seqcore.type import CountMassVector, CountTable, FrequencyProfile, TokenSequence
from stationary_mass.seqcore.helpers import (
  frequency_profile,
  ingest_tokens,
  l1_distance,
  occurrence_counts,
  read_token_file,
  spread,
  token_lines,
  tv_distance,
  write_token_file,
)

__all__ = [
  'CountMassVector',
  'CountTable',
  'FrequencyProfile',
  'TokenSequence',
  'frequency_profile',
  'ingest_tokens',
  'l1_distance',
  'occurrence_counts',
  'read_token_file',
  'spread',
  'token_lines',
  'tv_distance',
  'write_token_file',
]
