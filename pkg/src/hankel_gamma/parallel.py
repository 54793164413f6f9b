"""Worker-count policy and an order-preserving map over a process pool."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "HANKEL_GAMMA_THREADS"


def worker_count() -> int:
    """HANKEL_GAMMA_THREADS caps the pool; 0 or unset means one worker per CPU."""
    raw = os.environ.get(ENV_VAR, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{ENV_VAR} must be >= 0, got {n}")
    return n or (os.cpu_count() or 1)


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """map() with results in input order; runs inline for a single worker."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))
