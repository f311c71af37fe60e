"""Positive-butterfly metrics for case-study style analysis.

A positive butterfly is a butterfly whose four edges are all positive,
i.e. a butterfly of the positive subgraph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional, Union

import numpy as np

from .errors import IdenticalVerticesError, SamePartitionRequiredError
from .exact import per_vertex_counts
from .graph import Partition, SignedBipartiteGraph, VertexRef


class Metric(enum.Enum):
    POSITIVE_BUTTERFLIES = "pos-butterfly"
    POSITIVE_DEGREE = "pos-degree"


@dataclass(frozen=True)
class RankedList:
    metric: Metric
    entries: tuple[tuple[int, int], ...]
    labels: Optional[tuple[str, ...]] = None

    def __len__(self):
        return len(self.entries)

    def ids(self) -> list[int]:
        return [g for g, _ in self.entries]


def positive_subgraph(graph: SignedBipartiteGraph) -> SignedBipartiteGraph:
    _, _, signs = graph.edge_arrays()
    return graph.edge_subgraph(signs > 0)


def positive_butterflies_per_vertex(graph: SignedBipartiteGraph) -> dict[int, int]:
    return per_vertex_counts(positive_subgraph(graph))


def positive_degree(graph: SignedBipartiteGraph) -> dict[int, int]:
    n = graph.vertex_count
    pos = graph.signs > 0
    owner = np.repeat(np.arange(n), np.diff(graph.offsets))
    return dict(enumerate(np.bincount(owner[pos], minlength=n).tolist()))


def _positive_neighbors(graph, g):
    lo, hi = graph.offsets[g], graph.offsets[g + 1]
    nb, sg = graph.neighbors[lo:hi], graph.signs[lo:hi]
    return set(nb[sg > 0].tolist())


def pair_collaboration(graph: SignedBipartiteGraph, a: Union[VertexRef, int],
                       b: Union[VertexRef, int]) -> int:
    """Positive butterflies containing both ``a`` and ``b`` (same partition)."""
    ga, gb = graph.resolve(a), graph.resolve(b)
    if ga == gb:
        raise IdenticalVerticesError(f"vertex {ga} given twice")
    if graph.vertex(ga).partition is not graph.vertex(gb).partition:
        raise SamePartitionRequiredError(f"vertices {ga} and {gb} lie in different partitions")
    c = len(_positive_neighbors(graph, ga) & _positive_neighbors(graph, gb))
    return c * (c - 1) // 2


def top_k(graph: SignedBipartiteGraph, metric: Union[Metric, str], k: int, *,
          partition: Optional[Partition] = None,
          id_map: Optional[Mapping[int, str]] = None) -> RankedList:
    """Highest-scoring vertices, ties broken by ascending global id.

    ``partition`` restricts the ranking to one side.  Labels come from
    ``id_map`` when given, else from the graph's own labels if it has any.
    """
    metric = Metric(metric)
    if k < 1:
        raise ValueError("k must be >= 1")
    if metric is Metric.POSITIVE_BUTTERFLIES:
        scores = positive_butterflies_per_vertex(graph)
    else:
        scores = positive_degree(graph)
    if partition is Partition.LEFT:
        pool = range(graph.left_count)
    elif partition is Partition.RIGHT:
        pool = range(graph.left_count, graph.vertex_count)
    else:
        pool = range(graph.vertex_count)
    ranked = sorted(pool, key=lambda g: (-scores[g], g))[:k]
    entries = tuple((g, scores[g]) for g in ranked)
    labels = None
    if id_map is not None:
        labels = tuple(id_map.get(g, str(g)) for g in ranked)
    elif graph.left_labels is not None:
        labels = tuple(graph.label(g) for g in ranked)
    return RankedList(metric, entries, labels)
