"""Exact balanced-butterfly counting.

Three independent routes to the same numbers:

* :func:`brute_force_count` enumerates every 2x2 vertex quadruple and is
  the correctness oracle for small graphs.
* :func:`bb_base` gathers priority-pruned wedges per (start, end) pair and
  checks every pair of wedges for balance.
* :func:`bb_bucket` splits the same wedges into symmetric / asymmetric
  buckets and counts pairs combinatorially, never looking at a butterfly.

:func:`vbbfc` and :func:`per_vertex_counts` count the balanced
butterflies that contain a given vertex.
"""

from __future__ import annotations

import enum
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Union

import numpy as np

from . import _kernels
from .errors import TooLargeError
from .graph import Sign, SignedBipartiteGraph, VertexRef

BRUTE_FORCE_LIMIT = 10**6

# per-start sums are int64 inside the kernels; C(|E|, 2) must fit
_MAX_KERNEL_EDGES = 3_000_000_000


class WedgeClass(enum.Enum):
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"


@dataclass
class WedgeBucketTable:
    """Symmetric (``b1``) and asymmetric (``b2``) wedge counts for one start vertex, keyed by end vertex."""

    start: int
    b1: Counter = field(default_factory=Counter)
    b2: Counter = field(default_factory=Counter)

    def ends(self) -> list[int]:
        return sorted(set(self.b1) | set(self.b2))


@dataclass
class CountReport:
    algo: str
    balanced: int
    unbalanced: int
    wedges_processed: int = 0
    pair_checks: int = 0
    wall_time: float = 0.0
    workers: int = 1

    @property
    def total(self) -> int:
        return self.balanced + self.unbalanced

    @property
    def wall_time_ms(self) -> float:
        return round(self.wall_time * 1000.0, 3)

    def counts(self) -> tuple[int, int, int]:
        return self.balanced, self.unbalanced, self.total

    def as_dict(self) -> dict:
        return {
            "algo": self.algo,
            "balanced": self.balanced,
            "unbalanced": self.unbalanced,
            "total": self.total,
            "wedges_processed": self.wedges_processed,
            "pair_checks": self.pair_checks,
            "wall_time_ms": self.wall_time_ms,
            "workers": self.workers,
        }


def is_balanced(s1: Sign, s2: Sign, s3: Sign, s4: Sign) -> bool:
    """True when an even number of the four signs is negative."""
    negatives = sum(1 for s in (s1, s2, s3, s4) if s == Sign.NEGATIVE)
    return negatives % 2 == 0


def classify_wedge(s1: Sign, s2: Sign) -> WedgeClass:
    return WedgeClass.SYMMETRIC if s1 == s2 else WedgeClass.ASYMMETRIC


def pair_contribution(l: int, m: int) -> int:
    """Balanced butterflies closed by ``l`` symmetric and ``m`` asymmetric wedges sharing both endpoints."""
    if l < 0 or m < 0:
        raise ValueError("wedge counts must be nonnegative")
    return l * (l - 1) // 2 + m * (m - 1) // 2


def iter_butterflies(graph: SignedBipartiteGraph) -> Iterator[tuple[int, int, int, int, bool]]:
    """Yield ``(u_i, u_j, v_i, v_j, balanced)`` for every butterfly.

    ``u_*`` are left indices and ``v_*`` right indices, each pair in
    increasing order.  Reads only the edge list, not the CSR arrays.
    """
    sign_of = {(i, j): s for i, j, s in graph.edges()}
    for ui, uj in combinations(range(graph.left_count), 2):
        for vi, vj in combinations(range(graph.right_count), 2):
            a = sign_of.get((ui, vi))
            if a is None:
                continue
            b = sign_of.get((ui, vj))
            if b is None:
                continue
            c = sign_of.get((uj, vi))
            if c is None:
                continue
            d = sign_of.get((uj, vj))
            if d is None:
                continue
            yield ui, uj, vi, vj, is_balanced(a, b, d, c)


def _check_guard(graph, allow_large):
    if not allow_large and graph.left_count * graph.right_count > BRUTE_FORCE_LIMIT:
        raise TooLargeError(
            f"brute force over {graph.left_count}x{graph.right_count} exceeds "
            f"|U|*|V| <= {BRUTE_FORCE_LIMIT}; pass allow_large=True to override")


def brute_force_count(graph: SignedBipartiteGraph, *, allow_large: bool = False) -> CountReport:
    _check_guard(graph, allow_large)
    t0 = time.perf_counter()
    balanced = unbalanced = 0
    for *_, ok in iter_butterflies(graph):
        if ok:
            balanced += 1
        else:
            unbalanced += 1
    return CountReport("brute", balanced, unbalanced, wall_time=time.perf_counter() - t0)


def brute_force_per_vertex(graph: SignedBipartiteGraph, *, allow_large: bool = False) -> dict[int, int]:
    """Balanced butterflies containing each vertex, by explicit enumeration."""
    _check_guard(graph, allow_large)
    counts = dict.fromkeys(range(graph.vertex_count), 0)
    L = graph.left_count
    for ui, uj, vi, vj, ok in iter_butterflies(graph):
        if ok:
            for g in (ui, uj, L + vi, L + vj):
                counts[g] += 1
    return counts


def _check_size(graph):
    if graph.edge_count > _MAX_KERNEL_EDGES:
        raise OverflowError("graph too large for 64-bit per-vertex accumulators")


def _all_starts(graph):
    return np.arange(graph.vertex_count, dtype=np.int64)


def _sum(a: np.ndarray) -> int:
    return sum(a.tolist())


def bb_base(graph: SignedBipartiteGraph) -> CountReport:
    """Vertex-priority baseline: per (start, end) pair, test every pair of wedges."""
    _check_size(graph)
    n = graph.vertex_count
    t0 = time.perf_counter()
    out = [np.zeros(n, np.int64) for _ in range(4)]
    _kernels.base_scan(graph.offsets, graph.neighbors, graph.signs, graph.rank,
                       _all_starts(graph), *_kernels.base_scratch(n, graph.edge_count), *out)
    elapsed = time.perf_counter() - t0
    balanced, unbalanced, wedges, pairs = (_sum(a) for a in out)
    return CountReport("base", balanced, unbalanced, wedges, pairs, elapsed)


def bucket_partials(graph: SignedBipartiteGraph, starts: np.ndarray):
    """Per-start-vertex (balanced, unbalanced, wedges) arrays for the given starts."""
    n = graph.vertex_count
    out = [np.zeros(n, np.int64) for _ in range(3)]
    _kernels.bucket_scan(graph.offsets, graph.neighbors, graph.signs, graph.rank,
                         np.asarray(starts, dtype=np.int64), *_kernels.bucket_scratch(n), *out)
    return out


def bb_bucket(graph: SignedBipartiteGraph) -> CountReport:
    """Wedge bucketing: balanced = sum of C(l,2)+C(m,2), unbalanced = sum of l*m."""
    _check_size(graph)
    t0 = time.perf_counter()
    out = bucket_partials(graph, _all_starts(graph))
    elapsed = time.perf_counter() - t0
    balanced, unbalanced, wedges = (_sum(a) for a in out)
    return CountReport("bucket", balanced, unbalanced, wedges, 0, elapsed)


def wedge_buckets(graph: SignedBipartiteGraph, u: Union[VertexRef, int]) -> WedgeBucketTable:
    """Bucket table for one start vertex, built with plain Python loops."""
    g = graph.resolve(u)
    rank = graph.rank
    table = WedgeBucketTable(g)
    for v, suv in _adjacent(graph, g):
        if rank[v] >= rank[g]:
            break
        for w, svw in _adjacent(graph, v):
            if rank[w] >= rank[g]:
                break
            if classify_wedge(suv, svw) is WedgeClass.SYMMETRIC:
                table.b1[w] += 1
            else:
                table.b2[w] += 1
    return table


@dataclass(frozen=True)
class PairTally:
    pair_checks: int
    balanced: int
    unbalanced: int


def base_pair_tallies(graph: SignedBipartiteGraph, u: Union[VertexRef, int]) -> dict[int, PairTally]:
    """Per end vertex, the outcome of the baseline's explicit pair loop from start ``u``."""
    g = graph.resolve(u)
    rank = graph.rank
    lists = defaultdict(list)
    for v, suv in _adjacent(graph, g):
        if rank[v] >= rank[g]:
            break
        for w, svw in _adjacent(graph, v):
            if rank[w] >= rank[g]:
                break
            lists[w].append((v, suv, svw))
    tallies = {}
    for w, records in lists.items():
        checks = bal = 0
        for (_, a1, a2), (_, b1, b2) in combinations(records, 2):
            checks += 1
            bal += is_balanced(a1, a2, b2, b1)
        tallies[w] = PairTally(checks, bal, checks - bal)
    return tallies


def _adjacent(graph, g):
    lo, hi = graph.offsets[g], graph.offsets[g + 1]
    return [(int(w), Sign(int(s))) for w, s in zip(graph.neighbors[lo:hi], graph.signs[lo:hi])]


def vbbfc(graph: SignedBipartiteGraph, u: Union[VertexRef, int]) -> int:
    """Number of balanced butterflies containing ``u``."""
    g = graph.resolve(u)
    n = graph.vertex_count
    out = np.zeros(n, np.int64)
    _kernels.vertex_scan(graph.offsets, graph.neighbors, graph.signs,
                         np.array([g], dtype=np.int64), *_kernels.bucket_scratch(n), out)
    return int(out[g])


def per_vertex_counts(graph: SignedBipartiteGraph) -> dict[int, int]:
    _check_size(graph)
    n = graph.vertex_count
    out = np.zeros(n, np.int64)
    _kernels.vertex_scan(graph.offsets, graph.neighbors, graph.signs,
                         _all_starts(graph), *_kernels.bucket_scratch(n), out)
    return dict(enumerate(out.tolist()))
