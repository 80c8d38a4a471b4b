"""Render command results as CSV or JSON text"""

import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

CSV_FLOAT_FORMAT = '%.17g'


def _plain(value: Any) -> Any:
  """numpy scalars/arrays to Python values, non-finite floats to None"""
  if isinstance(value, dict):
    return {key: _plain(v) for key, v in value.items()}
  if isinstance(value, (list, tuple)):
    return [_plain(v) for v in value]
  if isinstance(value, np.ndarray):
    return [_plain(v) for v in value.tolist()]
  if isinstance(value, np.integer):
    return int(value)
  if isinstance(value, (float, np.floating)):
    value = float(value)
    return value if math.isfinite(value) else None
  return value


def render_json(data: Any) -> str:
  # Python's float repr round-trips exactly
  return json.dumps(_plain(data), indent=2, allow_nan=False) + '\n'


def render_csv(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
  df = pd.DataFrame(rows, columns=list(columns))
  buffer = io.StringIO()
  df.to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')
  return buffer.getvalue()


def write_output(text: str, out: Optional[Path] = None) -> None:
  """Write to `out`, or to stdout when no path is given."""
  if out is None:
    sys.stdout.write(text)
    sys.stdout.flush()
    return
  out = Path(out)
  out.parent.mkdir(parents=True, exist_ok=True)
  with open(out, 'w', encoding='utf-8', newline='') as f:
    f.write(text)
