from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .config import threads_from_environment

T = TypeVar('T')
R = TypeVar('R')


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Map fn over items on up to `threads` workers; results keep input order.

    Every reduction downstream runs over this list, so the outcome does not
    depend on the thread count.
    """
    items = list(items)
    if threads is None:
        threads = threads_from_environment()
    if threads <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))
