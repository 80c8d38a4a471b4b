"""Counting and distance utilities shared by every other module"""

import math
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from stationary_mass.errors import DomainError, InconsistentAlphabetError, LengthMismatchError
from stationary_mass.seqcore.type import CountMassVector, CountTable, FrequencyProfile, TokenSequence

VectorLike = Union[Sequence[float], np.ndarray, CountMassVector]


def ingest_tokens(raw: Iterable[str]) -> TokenSequence:
  """
  Map raw tokens to dense symbol IDs in first-appearance order.

  Examples:
      ingest_tokens(['a', 'b', 'a']) -> symbols [0, 1, 0], tokens ('a', 'b')
  """
  vocab = {}
  symbols = []
  for token in raw:
    if token not in vocab:
      vocab[token] = len(vocab)
    symbols.append(vocab[token])
  return TokenSequence(symbols=np.asarray(symbols, dtype=np.int64), tokens=tuple(vocab))


def occurrence_counts(seq: TokenSequence) -> CountTable:
  counts = np.bincount(seq.symbols, minlength=seq.support_size)
  return CountTable(counts=counts, n=seq.n)


def frequency_profile(table: CountTable, alphabet_size: Optional[int] = None) -> FrequencyProfile:
  """
  Frequency of frequencies phi[zeta] = #{x : N_x = zeta}.

  phi[0] is filled in only when the alphabet size is known.
  """
  distinct = int(table.counts.size)
  phi = np.bincount(table.counts, minlength=table.n + 1).astype(np.int64)
  if phi.size > table.n + 1:
    raise ValueError('Count table holds a count larger than n')
  phi[0] = 0
  if alphabet_size is None:
    return FrequencyProfile(phi=phi, phi0_known=False)
  if alphabet_size < distinct:
    raise InconsistentAlphabetError(f'alphabet_size={alphabet_size} is smaller than the observed support ({distinct})')
  phi[0] = alphabet_size - distinct
  return FrequencyProfile(phi=phi, phi0_known=True)


def spread(values: Sequence[float]) -> float:
  """
  Average squared pairwise difference (1/(m(m-1))) sum_{i<j} (a_i - a_j)^2.

  Uses m * sum(d^2) - (sum d)^2 on values shifted by the first entry, so a
  constant input gives exactly 0.
  """
  arr = np.asarray(values, dtype=np.float64).reshape(-1)
  m = arr.size
  if m < 2:
    raise DomainError(f'spread needs at least 2 values, got {m}')
  d = arr - arr[0]
  total = math.fsum(d)
  total_sq = math.fsum(d * d)
  return max(0.0, (m * total_sq - total * total) / (m * (m - 1)))


def _as_array(v: VectorLike) -> np.ndarray:
  if isinstance(v, CountMassVector):
    return v.mass
  return np.asarray(v, dtype=np.float64).reshape(-1)


def l1_distance(p: VectorLike, q: VectorLike) -> float:
  a, b = _as_array(p), _as_array(q)
  if a.size != b.size:
    raise LengthMismatchError(f'Vectors differ in length: {a.size} vs {b.size}')
  return math.fsum(np.abs(a - b))


def tv_distance(p: VectorLike, q: VectorLike) -> float:
  return 0.5 * l1_distance(p, q)


def read_token_file(path: Union[str, Path]) -> TokenSequence:
  """UTF-8 text, one token per line; empty lines are skipped."""
  with open(path, 'r', encoding='utf-8') as f:
    raw = [line.rstrip('\r\n') for line in f]
  return ingest_tokens(token for token in raw if token != '')


def token_lines(seq: TokenSequence) -> str:
  """Token file text: one raw token per line, newline-terminated."""
  return ''.join(f'{token}\n' for token in seq.raw())


def write_token_file(seq: TokenSequence, path: Union[str, Path]) -> None:
  with open(path, 'w', encoding='utf-8', newline='\n') as f:
    f.write(token_lines(seq))
