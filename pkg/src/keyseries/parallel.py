"""Deterministic parallel mapping for the embarrassingly parallel sweeps."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

A = TypeVar("A")
B = TypeVar("B")


def ordered_map(fn: Callable[[A], B], items: Iterable[A], threads: int = 1) -> list[B]:
    """Map fn over items, preserving input order in the result.

    With threads > 1 the work is spread over a thread pool; results are still
    collected in input order, so downstream reduces stay deterministic.
    """
    seq = list(items)
    if threads <= 1 or len(seq) <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, seq))
