"""Order-preserving map over independent grid points, capped by OPOLY_THREADS."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count():
    try:
        n = int(os.environ.get("OPOLY_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, n)


def grid_map(fn, items):
    """[fn(x) for x in items], possibly on a thread pool; results stay in grid order."""
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
