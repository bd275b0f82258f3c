"""Thread-pool map with a deterministic merge.

TORIC_THREADS caps the worker count; 0 or unset picks an automatic value.
Results are returned in input order, so output never depends on the degree
of parallelism.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count() -> int:
    raw = os.environ.get("TORIC_THREADS", "0")
    try:
        v = int(raw)
    except ValueError:
        v = 0
    if v <= 0:
        return min(os.cpu_count() or 1, 8)
    return v


def parallel_map(fn, items):
    items = list(items)
    n = worker_count()
    if n <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
