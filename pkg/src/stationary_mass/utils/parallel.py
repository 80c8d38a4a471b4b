from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar('T')
R = TypeVar('R')


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
  """
  Apply func to every item, results in input order.

  Runs on a thread pool when workers > 1; Executor.map yields in submission
  order, so the output never depends on completion order.
  """
  items = list(items)
  if workers <= 1 or len(items) <= 1:
    return [func(item) for item in items]
  with ThreadPoolExecutor(max_workers=workers) as executor:
    return list(executor.map(func, items))
