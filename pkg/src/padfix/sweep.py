"""Deterministic data-parallel grid evaluation.

Work items are mapped in their given order and results come back in that
same order regardless of worker count, so identical configs give identical
output bytes. Worker resolution: explicit flag, then the PADFIX_JOBS
environment variable, then available parallelism.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

JOBS_ENV_VAR = "PADFIX_JOBS"


def resolve_jobs(explicit: int | None = None) -> int:
    if explicit is not None:
        if explicit < 1:
            raise ValueError(f"worker count must be >= 1, got {explicit}")
        return explicit
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise ValueError(f"{JOBS_ENV_VAR} must be an integer, got {env!r}")
        if jobs < 1:
            raise ValueError(f"{JOBS_ENV_VAR} must be >= 1, got {jobs}")
        return jobs
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int) -> list[R]:
    """Order-preserving map, chunked over a process pool when jobs > 1.

    fn must be picklable (a module-level function).
    """
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    chunksize = max(1, -(-len(items) // (jobs * 8)))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
