"""
Parallel Helpers

Partitioned map-reduce over a thread pool. Partial results are combined in
partition order, so the outcome never depends on scheduling.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence, TypeVar

from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)

P = TypeVar("P")
R = TypeVar("R")

THREADS_ENV = "QUANDLE_LAB_THREADS"


def worker_count(configured: Optional[int] = None) -> int:
    """
    Number of workers to use

    An explicit value is capped by QUANDLE_LAB_THREADS; without one the
    variable is used as is, then the CPU count. Always at least 1.
    """
    cap = _environment_cap()
    if configured:
        chosen = configured if cap is None else min(configured, cap)
    else:
        chosen = (os.cpu_count() or 1) if cap is None else cap
    return max(1, chosen)


def _environment_cap() -> Optional[int]:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {THREADS_ENV}={raw!r}")
        return None


def partitioned_sum(
    work: Callable[[P], R],
    parts: Sequence[P],
    combine: Callable[[R, R], R],
    initial: R,
    workers: Optional[int] = None,
) -> R:
    """
    Map work over parts and fold the results with combine, in order

    Args:
        work: Function evaluated once per part
        parts: Partition of the problem
        combine: Associative accumulator, e.g. group-ring addition
        initial: Starting accumulator value
        workers: Thread cap; 1 runs serially without a pool

    Returns:
        combine(...combine(initial, work(parts[0]))..., work(parts[-1]))
    """
    count = worker_count(workers)
    if count == 1 or len(parts) <= 1:
        results = [work(part) for part in parts]
    else:
        with ThreadPoolExecutor(max_workers=min(count, len(parts))) as pool:
            results = list(pool.map(work, parts))
    total = initial
    for result in results:
        total = combine(total, result)
    return total
