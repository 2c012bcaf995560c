"""Deterministic process-pool mapping.

Results come back in input order regardless of scheduling, so any code
built on parallel_map produces identical output at any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

WORKERS_ENV = "SPERNER_WORKERS"

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(explicit: int | None = None) -> int:
    """Explicit value, else the SPERNER_WORKERS env var, else 1."""
    if explicit is not None:
        value = explicit
    else:
        value = int(os.environ.get(WORKERS_ENV, "1"))
    if value < 1:
        raise ValueError(f"worker count must be >= 1, got {value}")
    return value


def parallel_map(fn: Callable[[T], R], items: Iterable[T],
                 workers: int = 1) -> list[R]:
    """Order-preserving map, fanned out over processes when workers > 1."""
    seq: Sequence[T] = list(items)
    if workers <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    with ProcessPoolExecutor(max_workers=min(workers, len(seq))) as pool:
        return list(pool.map(fn, seq))
