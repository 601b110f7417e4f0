"""Ordered fan-out over independent partitions."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

P = TypeVar("P")
R = TypeVar("R")


def map_partitions(fn: Callable[[P], R], parts: Sequence[P], threads: int = 1) -> list[R]:
    """fn over parts, results in input order whatever the thread count."""
    if threads <= 1 or len(parts) <= 1:
        return [fn(part) for part in parts]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, parts))
