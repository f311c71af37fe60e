"""Edge-list parsing and writing, sign assignment and synthetic graphs.

Randomness
----------
All sampling uses numpy's PCG64 bit generator seeded through
``numpy.random.SeedSequence(seed)``.  Uniform variates are taken from the
raw 64-bit output as ``(x >> 11) * 2**-53`` rather than from
``Generator.random`` so the stream depends only on PCG64 itself.  An
edge draws exactly one variate and is positive iff that variate is below
the positive probability.  Edges are visited in file order (for parsed
lists) or row-major ``(left, right)`` order (for generated graphs).

File formats
------------
``signed-tsv``    ``<left> <right> <sign>``; sign ``1``/``+1``/``+`` is positive,
                  ``0``/``-1``/``-`` negative.
``unsigned-tsv``  ``<left> <right> [ignored ...]``.
``konect``        ``<left> <right> <weight> [timestamp]``; weight > 0 is
                  positive, weight <= 0 negative.

Columns are whitespace separated; lines starting with ``%`` or ``#`` are
comments.  External ids are remapped densely per partition in order of
first appearance, unless the file starts with the size header written by
:func:`format_signed_tsv` (``% signed-bipartite <left> <right>``), in
which case ids are taken verbatim as dense indices.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DuplicateEdgeError, EmptyInputError, MalformedLineError
from .graph import SignedBipartiteGraph, build_graph_from_arrays

SIZE_HEADER = "signed-bipartite"

_POSITIVE_TOKENS = {"1", "+1", "+"}
_NEGATIVE_TOKENS = {"0", "-1", "-"}

SeedLike = Union[int, Sequence[int]]


class EdgeListFormat(enum.Enum):
    SIGNED_TSV = "signed-tsv"
    UNSIGNED_TSV = "unsigned-tsv"
    KONECT = "konect"


@dataclass(frozen=True)
class EdgeList:
    """Parsed edges before signs are fixed.

    ``weights`` holds the third column when the format has one.
    """

    left_count: int
    right_count: int
    left: np.ndarray
    right: np.ndarray
    weights: Optional[np.ndarray] = None
    left_labels: Optional[tuple] = None
    right_labels: Optional[tuple] = None

    def __len__(self):
        return len(self.left)


@dataclass(frozen=True)
class SyntheticSpec:
    left_count: int
    right_count: int
    edge_probability: float
    positive_probability: float
    seed: int

    def __post_init__(self):
        if self.left_count < 0 or self.right_count < 0:
            raise ValueError("partition sizes must be nonnegative")
        for name in ("edge_probability", "positive_probability"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")

    def __str__(self):
        return (f"random:{self.left_count}:{self.right_count}:{self.edge_probability}:"
                f"{self.positive_probability}:{self.seed}")


def uniforms(n: int, seed: SeedLike, skip: int = 0) -> np.ndarray:
    """``n`` doubles in [0, 1) from PCG64 after discarding ``skip`` draws."""
    bits = np.random.PCG64(np.random.SeedSequence(seed))
    if skip:
        bits.advance(skip)
    raw = bits.random_raw(n) if n else np.zeros(0, dtype=np.uint64)
    return (np.asarray(raw, dtype=np.uint64) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def _check_probability(p, name="positive_probability"):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {p}")


class _DenseIds:
    def __init__(self):
        self.index = {}

    def __call__(self, token):
        k = self.index.get(token)
        if k is None:
            k = self.index[token] = len(self.index)
        return k

    def labels(self):
        return tuple(self.index)


def _read_rows(text: str, fmt: EdgeListFormat):
    """Yield (line_no, left_token, right_token, value) and the optional size header."""
    header = None
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped[0] in "%#":
            parts = stripped[1:].split()
            if not rows and len(parts) == 3 and parts[0] == SIZE_HEADER:
                try:
                    header = (int(parts[1]), int(parts[2]))
                except ValueError:
                    raise MalformedLineError(line_no, "bad size header") from None
            continue
        cols = stripped.split()
        if fmt is EdgeListFormat.SIGNED_TSV:
            if len(cols) != 3:
                raise MalformedLineError(line_no, f"expected 3 columns, got {len(cols)}")
            tok = cols[2]
            if tok in _POSITIVE_TOKENS:
                value = 1
            elif tok in _NEGATIVE_TOKENS:
                value = -1
            else:
                raise MalformedLineError(line_no, f"unknown sign token {tok!r}")
        elif fmt is EdgeListFormat.KONECT:
            if len(cols) not in (3, 4):
                raise MalformedLineError(line_no, f"expected 3 or 4 columns, got {len(cols)}")
            try:
                value = float(cols[2])
            except ValueError:
                raise MalformedLineError(line_no, f"bad weight {cols[2]!r}") from None
            if math.isnan(value):
                raise MalformedLineError(line_no, "weight is NaN")
        else:
            if len(cols) < 2:
                raise MalformedLineError(line_no, f"expected 2 columns, got {len(cols)}")
            value = float(cols[2]) if len(cols) > 2 and _is_number(cols[2]) else None
        rows.append((line_no, cols[0], cols[1], value))
    return header, rows


def _is_number(tok):
    try:
        float(tok)
    except ValueError:
        return False
    return True


def _index_rows(header, rows):
    """Map tokens to dense indices and reject duplicate pairs."""
    n = len(rows)
    left = np.empty(n, dtype=np.int64)
    right = np.empty(n, dtype=np.int64)
    seen = {}
    if header is None:
        lmap, rmap = _DenseIds(), _DenseIds()
    for k, (line_no, a, b, _) in enumerate(rows):
        if header is None:
            i, j = lmap(a), rmap(b)
        else:
            try:
                i, j = int(a), int(b)
            except ValueError:
                raise MalformedLineError(line_no, "non-integer id under size header") from None
            if not (0 <= i < header[0] and 0 <= j < header[1]):
                raise MalformedLineError(line_no, f"id outside declared sizes {header}")
        if (i, j) in seen:
            raise DuplicateEdgeError(a, b, line_no)
        seen[(i, j)] = line_no
        left[k], right[k] = i, j
    if header is None:
        return (len(lmap.index), len(rmap.index), left, right, lmap.labels(), rmap.labels())
    return header[0], header[1], left, right, None, None


def parse_edge_list(text: str, fmt: Union[EdgeListFormat, str] = EdgeListFormat.SIGNED_TSV):
    """Parse edge-list text.

    Signed formats return a :class:`SignedBipartiteGraph`.  ``unsigned-tsv``
    returns an :class:`EdgeList`; give it signs with
    :func:`assign_random_signs` or :func:`assign_threshold_signs`.
    """
    fmt = EdgeListFormat(fmt)
    header, rows = _read_rows(text, fmt)
    if not rows and header is None:
        raise EmptyInputError("no edges in input")
    L, R, left, right, llab, rlab = _index_rows(header, rows)
    if fmt is EdgeListFormat.UNSIGNED_TSV:
        vals = [r[3] for r in rows]
        weights = None
        if rows and all(v is not None for v in vals):
            weights = np.array(vals, dtype=np.float64)
        return EdgeList(L, R, left, right, weights, llab, rlab)
    signs = np.array([1 if r[3] > 0 else -1 for r in rows], dtype=np.int64)
    return build_graph_from_arrays(L, R, left, right, signs, left_labels=llab, right_labels=rlab)


def read_edge_list(path: Union[str, Path], fmt: Union[EdgeListFormat, str] = EdgeListFormat.SIGNED_TSV):
    return parse_edge_list(Path(path).read_text(), fmt)


def parse_weighted_edges(text: str) -> EdgeList:
    """Parse ``<left> <right> <weight> [...]`` rows keeping the raw weights."""
    header, rows = _read_rows(text, EdgeListFormat.KONECT)
    if not rows and header is None:
        raise EmptyInputError("no edges in input")
    L, R, left, right, llab, rlab = _index_rows(header, rows)
    weights = np.array([r[3] for r in rows], dtype=np.float64)
    return EdgeList(L, R, left, right, weights, llab, rlab)


def assign_random_signs(edges: EdgeList, positive_probability: float, seed: SeedLike) -> SignedBipartiteGraph:
    """Each edge positive with the given probability, independently, in file order."""
    _check_probability(positive_probability)
    positive = uniforms(len(edges), seed) < positive_probability
    return _signed(edges, np.where(positive, 1, -1))


def assign_threshold_signs(edges: EdgeList, threshold: float) -> SignedBipartiteGraph:
    """Weight >= threshold is positive, anything else negative."""
    if edges.weights is None:
        raise ValueError("edge list carries no weights")
    return _signed(edges, np.where(edges.weights >= threshold, 1, -1))


def _signed(edges, signs):
    return build_graph_from_arrays(edges.left_count, edges.right_count, edges.left, edges.right,
                                   signs, left_labels=edges.left_labels,
                                   right_labels=edges.right_labels)


def generate_random_bipartite(spec: SyntheticSpec) -> SignedBipartiteGraph:
    """Erdos-Renyi style bipartite graph with independent signs.

    One stream: first ``left*right`` variates decide edge presence in
    row-major order, the following ones decide signs of present edges in
    the same order.
    """
    L, R = spec.left_count, spec.right_count
    u = uniforms(L * R, spec.seed)
    present = np.flatnonzero(u < spec.edge_probability)
    left, right = np.divmod(present, max(R, 1))
    signs = np.where(uniforms(len(present), spec.seed, skip=L * R) < spec.positive_probability, 1, -1)
    return build_graph_from_arrays(L, R, left, right, signs)


def generate_skewed_bipartite(few_left: int, many_right: int, density: float,
                              positive_probability: float, seed: int) -> SignedBipartiteGraph:
    """Few dense left rows against many right vertices.

    Left pairs share about ``density**2 * many_right`` neighbours, the
    regime where wedge bucketing beats pairwise checks by the widest margin.
    """
    if few_left > many_right:
        raise ValueError("expected few_left <= many_right")
    return generate_random_bipartite(
        SyntheticSpec(few_left, many_right, density, positive_probability, seed))


def format_signed_tsv(graph: SignedBipartiteGraph) -> str:
    """Serialize with dense ids, a size header and ``+1``/``-1`` sign tokens."""
    left, right, signs = graph.edge_arrays()
    lines = [f"% {SIZE_HEADER} {graph.left_count} {graph.right_count}"]
    lines.extend(f"{i}\t{j}\t{'+1' if s > 0 else '-1'}"
                 for i, j, s in zip(left.tolist(), right.tolist(), signs.tolist()))
    return "\n".join(lines) + "\n"


def write_signed_tsv(graph: SignedBipartiteGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_signed_tsv(graph))


def format_id_map(graph: SignedBipartiteGraph) -> str:
    """``<global_id>\\t<label>`` for every vertex."""
    return "".join(f"{g}\t{graph.label(g)}\n" for g in range(graph.vertex_count))


def parse_id_map(text: str) -> dict[int, str]:
    out = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip()[0] in "%#":
            continue
        parts = line.rstrip("\n").split("\t", 1)
        if len(parts) != 2:
            raise MalformedLineError(line_no, "expected <global_id>\\t<label>")
        try:
            out[int(parts[0])] = parts[1]
        except ValueError:
            raise MalformedLineError(line_no, f"bad global id {parts[0]!r}") from None
    return out
