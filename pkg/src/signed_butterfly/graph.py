"""Signed bipartite graph storage, sign algebra and vertex priority.

Vertices carry a global id: left vertex ``i`` is ``i`` and right vertex
``j`` is ``left_count + j``.  Adjacency is stored CSR-style (offsets,
neighbor ids, signs) with every neighbor list sorted by ascending
priority rank, which lets the counting kernels stop scanning a list as
soon as they reach a vertex that outranks the start vertex.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import DuplicateEdgeError, IndexOutOfRangeError, UnknownVertexError


class Sign(enum.IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return NotImplemented

    def flipped(self) -> "Sign":
        return Sign(-int(self))

    def __str__(self):
        return "+" if self is Sign.POSITIVE else "-"


class Partition(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class VertexRef:
    partition: Partition
    index: int
    global_id: int


@dataclass(frozen=True, eq=False)
class PriorityOrder:
    """Strict total order on all vertices, keyed by (degree, global id).

    ``rank[g]`` is the position of vertex ``g`` when all vertices are
    sorted ascending by priority, so larger rank means higher priority.
    """

    rank: np.ndarray

    def __len__(self):
        return len(self.rank)

    def higher(self, a: int, b: int) -> bool:
        return bool(self.rank[a] > self.rank[b])

    def ascending(self) -> np.ndarray:
        """Global ids from lowest to highest priority."""
        return np.argsort(self.rank, kind="stable")


def _priority_ranks(degree: np.ndarray) -> np.ndarray:
    n = len(degree)
    ids = np.arange(n, dtype=np.int64)
    order = np.lexsort((ids, degree))
    rank = np.empty(n, dtype=np.int64)
    rank[order] = ids
    return rank


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class SignedBipartiteGraph:
    """Immutable signed bipartite graph.

    Build instances with :func:`build_graph`; the constructor expects
    already validated, duplicate-free edge arrays.
    """

    __slots__ = (
        "left_count", "right_count", "offsets", "neighbors", "signs",
        "degree", "rank", "_left", "_right", "_edge_signs",
        "left_labels", "right_labels",
    )

    def __init__(self, left_count, right_count, left, right, signs,
                 left_labels=None, right_labels=None):
        self.left_count = int(left_count)
        self.right_count = int(right_count)
        n = self.left_count + self.right_count

        order = np.lexsort((right, left))
        self._left = _frozen(np.ascontiguousarray(left[order], dtype=np.int64))
        self._right = _frozen(np.ascontiguousarray(right[order], dtype=np.int64))
        self._edge_signs = _frozen(np.ascontiguousarray(signs[order], dtype=np.int8))

        right_gid = self._right + self.left_count
        src = np.concatenate([self._left, right_gid])
        dst = np.concatenate([right_gid, self._left])
        sgn = np.concatenate([self._edge_signs, self._edge_signs])

        degree = np.bincount(src, minlength=n).astype(np.int64)
        rank = _priority_ranks(degree)
        csr = np.lexsort((rank[dst], src))
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degree, out=offsets[1:])

        self.degree = _frozen(degree)
        self.rank = _frozen(rank)
        self.offsets = _frozen(offsets)
        self.neighbors = _frozen(np.ascontiguousarray(dst[csr], dtype=np.int64))
        self.signs = _frozen(np.ascontiguousarray(sgn[csr], dtype=np.int8))
        self.left_labels = tuple(left_labels) if left_labels is not None else None
        self.right_labels = tuple(right_labels) if right_labels is not None else None

    @property
    def vertex_count(self) -> int:
        return self.left_count + self.right_count

    @property
    def edge_count(self) -> int:
        return len(self._left)

    @property
    def priority(self) -> PriorityOrder:
        return PriorityOrder(self.rank)

    def left(self, index: int) -> VertexRef:
        if not 0 <= index < self.left_count:
            raise UnknownVertexError(f"no left vertex {index}")
        return VertexRef(Partition.LEFT, int(index), int(index))

    def right(self, index: int) -> VertexRef:
        if not 0 <= index < self.right_count:
            raise UnknownVertexError(f"no right vertex {index}")
        return VertexRef(Partition.RIGHT, int(index), self.left_count + int(index))

    def vertex(self, global_id: int) -> VertexRef:
        if not 0 <= global_id < self.vertex_count:
            raise UnknownVertexError(f"no vertex with global id {global_id}")
        if global_id < self.left_count:
            return self.left(global_id)
        return self.right(global_id - self.left_count)

    def resolve(self, v: Union[VertexRef, int]) -> int:
        """Global id of ``v``, checking it belongs to this graph."""
        if isinstance(v, VertexRef):
            ref = self.left(v.index) if v.partition is Partition.LEFT else self.right(v.index)
            if ref.global_id != v.global_id:
                raise UnknownVertexError(f"{v} does not match this graph's id layout")
            return ref.global_id
        return self.vertex(int(v)).global_id

    def label(self, global_id: int) -> str:
        ref = self.vertex(global_id)
        labels = self.left_labels if ref.partition is Partition.LEFT else self.right_labels
        if labels is None:
            return str(global_id)
        return labels[ref.index]

    def neighbors_of(self, v: Union[VertexRef, int]) -> list[tuple[VertexRef, Sign]]:
        g = self.resolve(v)
        lo, hi = self.offsets[g], self.offsets[g + 1]
        return [(self.vertex(int(w)), Sign(int(s)))
                for w, s in zip(self.neighbors[lo:hi], self.signs[lo:hi])]

    def sign(self, u: Union[VertexRef, int], v: Union[VertexRef, int]) -> Optional[Sign]:
        """Sign of edge (u, v), or None when absent."""
        a, b = self.resolve(u), self.resolve(v)
        lo, hi = self.offsets[a], self.offsets[a + 1]
        hit = np.flatnonzero(self.neighbors[lo:hi] == b)
        if len(hit) == 0:
            return None
        return Sign(int(self.signs[lo + hit[0]]))

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(left index, right index, sign) arrays in (left, right) order."""
        return self._left, self._right, self._edge_signs

    def edges(self) -> list[tuple[int, int, Sign]]:
        return [(int(i), int(j), Sign(int(s)))
                for i, j, s in zip(self._left, self._right, self._edge_signs)]

    def edge_subgraph(self, keep: np.ndarray) -> "SignedBipartiteGraph":
        """Graph on the same vertex sets keeping edges where ``keep`` is true."""
        keep = np.asarray(keep, dtype=bool)
        return SignedBipartiteGraph(
            self.left_count, self.right_count,
            self._left[keep], self._right[keep], self._edge_signs[keep],
            self.left_labels, self.right_labels,
        )

    def with_signs(self, signs: np.ndarray) -> "SignedBipartiteGraph":
        return SignedBipartiteGraph(
            self.left_count, self.right_count, self._left, self._right,
            np.asarray(signs, dtype=np.int8), self.left_labels, self.right_labels,
        )

    def __eq__(self, other):
        if not isinstance(other, SignedBipartiteGraph):
            return NotImplemented
        return (self.left_count == other.left_count
                and self.right_count == other.right_count
                and np.array_equal(self._left, other._left)
                and np.array_equal(self._right, other._right)
                and np.array_equal(self._edge_signs, other._edge_signs))

    __hash__ = None

    def __repr__(self):
        pos = int(np.count_nonzero(self._edge_signs > 0))
        return (f"SignedBipartiteGraph(left={self.left_count}, right={self.right_count}, "
                f"edges={self.edge_count}, positive={pos})")


EdgeSpec = tuple[int, int, Union[Sign, int]]


def build_graph(left_count: int, right_count: int, edges: Iterable[EdgeSpec], *,
                left_labels: Optional[Sequence[str]] = None,
                right_labels: Optional[Sequence[str]] = None) -> SignedBipartiteGraph:
    """Build a graph from ``(left_index, right_index, sign)`` triples.

    Signs may be :class:`Sign` members or the integers +1 / -1.  Raises
    :class:`IndexOutOfRangeError` for indices outside the partitions and
    :class:`DuplicateEdgeError` if a (left, right) pair repeats, whatever
    its signs.
    """
    if left_count < 0 or right_count < 0:
        raise ValueError("partition sizes must be nonnegative")
    edges = list(edges)
    left = np.fromiter((e[0] for e in edges), dtype=np.int64, count=len(edges))
    right = np.fromiter((e[1] for e in edges), dtype=np.int64, count=len(edges))
    signs = np.fromiter((int(e[2]) for e in edges), dtype=np.int64, count=len(edges))
    return build_graph_from_arrays(left_count, right_count, left, right, signs,
                                   left_labels=left_labels, right_labels=right_labels)


def build_graph_from_arrays(left_count, right_count, left, right, signs, *,
                            left_labels=None, right_labels=None) -> SignedBipartiteGraph:
    """Array form of :func:`build_graph`."""
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    signs = np.asarray(signs, dtype=np.int64)
    if not (len(left) == len(right) == len(signs)):
        raise ValueError("edge arrays differ in length")
    if len(left):
        bad = (left < 0) | (left >= left_count) | (right < 0) | (right >= right_count)
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            raise IndexOutOfRangeError(
                f"edge ({left[k]}, {right[k]}) outside {left_count}x{right_count}")
        if not np.isin(signs, (1, -1)).all():
            raise ValueError("signs must be +1 or -1")
        key = left * right_count + right
        uniq, first, counts = np.unique(key, return_index=True, return_counts=True)
        if (counts > 1).any():
            k = int(first[np.flatnonzero(counts > 1)[0]])
            raise DuplicateEdgeError(int(left[k]), int(right[k]))
    for labels, size in ((left_labels, left_count), (right_labels, right_count)):
        if labels is not None and len(labels) != size:
            raise ValueError("label list length does not match partition size")
    return SignedBipartiteGraph(left_count, right_count, left, right, signs.astype(np.int8),
                                left_labels, right_labels)


def compute_priority(graph: SignedBipartiteGraph) -> PriorityOrder:
    """Vertex priority: higher degree wins, equal degree falls back to larger global id."""
    return PriorityOrder(_frozen(_priority_ranks(np.asarray(graph.degree))))


def switch_vertex(graph: SignedBipartiteGraph, v: Union[VertexRef, int]) -> SignedBipartiteGraph:
    """Flip the sign of every edge incident to ``v``."""
    g = graph.resolve(v)
    left, right, signs = graph.edge_arrays()
    if g < graph.left_count:
        hit = left == g
    else:
        hit = right == g - graph.left_count
    return graph.with_signs(np.where(hit, -signs, signs))


def negate_all(graph: SignedBipartiteGraph) -> SignedBipartiteGraph:
    _, _, signs = graph.edge_arrays()
    return graph.with_signs(-signs.astype(np.int64))
