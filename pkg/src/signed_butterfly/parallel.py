"""Multi-threaded wedge bucketing.

Start vertices are independent, so they are split into chunks and handed
to worker threads.  Each worker owns its bucket scratch arrays and writes
per-start results into disjoint slots of shared output arrays; the only
synchronisation is the final reduction.  The compiled kernel releases the
GIL, so threads run truly in parallel.
"""

from __future__ import annotations

import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from . import _kernels
from .exact import CountReport, _check_size, _sum
from .graph import SignedBipartiteGraph

THREADS_ENV = "SBUTTERFLY_THREADS"


@dataclass(frozen=True)
class Static:
    """One contiguous block of start vertices per worker."""


@dataclass(frozen=True)
class Guided:
    """Heaviest start vertices first, in shrinking chunks pulled on demand."""

    min_chunk: int = 32


@dataclass(frozen=True)
class ParallelConfig:
    worker_count: int = 1
    chunking: Union[Static, Guided] = field(default_factory=Guided)

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if isinstance(self.chunking, Guided) and self.chunking.min_chunk < 1:
            raise ValueError("min_chunk must be >= 1")

    @classmethod
    def from_env(cls, default: int = 1) -> "ParallelConfig":
        raw = os.environ.get(THREADS_ENV)
        return cls(int(raw) if raw else default)


def static_chunks(n: int, workers: int) -> list[np.ndarray]:
    return [c for c in np.array_split(np.arange(n, dtype=np.int64), workers)]


def guided_chunks(graph: SignedBipartiteGraph, workers: int, min_chunk: int) -> list[np.ndarray]:
    # stable sort keeps equal-degree vertices in id order
    order = np.argsort(-graph.degree, kind="stable").astype(np.int64)
    chunks = []
    pos, n = 0, len(order)
    while pos < n:
        size = max(min_chunk, (n - pos) // (2 * workers))
        chunks.append(order[pos:pos + size])
        pos += size
    return chunks


def par_bb_bucket(graph: SignedBipartiteGraph, config: ParallelConfig = ParallelConfig()) -> CountReport:
    _check_size(graph)
    n = graph.vertex_count
    workers = config.worker_count
    t0 = time.perf_counter()
    out = [np.zeros(n, np.int64) for _ in range(3)]

    if isinstance(config.chunking, Static):
        assigned = static_chunks(n, workers)

        def work(k):
            _kernels.bucket_scan(graph.offsets, graph.neighbors, graph.signs, graph.rank,
                                 assigned[k], *_kernels.bucket_scratch(n), *out)
    else:
        chunks = guided_chunks(graph, workers, config.chunking.min_chunk)
        lock = threading.Lock()
        cursor = iter(chunks)

        def work(k):
            scratch = _kernels.bucket_scratch(n)
            while True:
                with lock:
                    chunk = next(cursor, None)
                if chunk is None:
                    return
                _kernels.bucket_scan(graph.offsets, graph.neighbors, graph.signs, graph.rank,
                                     chunk, *scratch, *out)

    if workers == 1:
        work(0)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for f in [pool.submit(work, k) for k in range(workers)]:
                f.result()

    elapsed = time.perf_counter() - t0
    balanced, unbalanced, wedges = (_sum(a) for a in out)
    return CountReport("parallel", balanced, unbalanced, wedges, 0, elapsed, workers)
