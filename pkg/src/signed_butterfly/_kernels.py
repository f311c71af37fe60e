"""Compiled inner loops shared by the exact, parallel and per-vertex counters.

Every kernel takes the CSR arrays of a graph plus a list of start
vertices and writes one result per start vertex into caller-owned output
arrays, so disjoint start lists can run concurrently (the kernels release
the GIL).  Per-start values are int64; callers sum them as Python ints.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def bucket_scan(offsets, neighbors, signs, rank, starts,
                b1, b2, touched, out_balanced, out_unbalanced, out_wedges):
    """Wedge bucketing from each start vertex.

    ``b1``/``b2``/``touched`` are zeroed scratch arrays of length |U|+|V|
    and are left zeroed on return.
    """
    for s in range(starts.shape[0]):
        u = starts[s]
        ru = rank[u]
        nt = 0
        wedges = 0
        for i in range(offsets[u], offsets[u + 1]):
            v = neighbors[i]
            if rank[v] >= ru:
                break
            suv = signs[i]
            for j in range(offsets[v], offsets[v + 1]):
                w = neighbors[j]
                if rank[w] >= ru:
                    break
                wedges += 1
                if b1[w] == 0 and b2[w] == 0:
                    touched[nt] = w
                    nt += 1
                if signs[j] == suv:
                    b1[w] += 1
                else:
                    b2[w] += 1
        balanced = 0
        unbalanced = 0
        for t in range(nt):
            w = touched[t]
            l = b1[w]
            m = b2[w]
            balanced += l * (l - 1) // 2 + m * (m - 1) // 2
            unbalanced += l * m
            b1[w] = 0
            b2[w] = 0
        out_balanced[u] = balanced
        out_unbalanced[u] = unbalanced
        out_wedges[u] = wedges


@njit(cache=True, nogil=True)
def base_scan(offsets, neighbors, signs, rank, starts,
              count, slot, touched, mid_sign_uv, mid_sign_vw, mid_vertex,
              out_balanced, out_unbalanced, out_wedges, out_pairs):
    """Baseline: store every wedge's signed middle record, then test each pair.

    ``count``/``slot`` are zeroed scratch of length |U|+|V|; the three
    ``mid_*`` record arrays need room for the largest per-start wedge
    count, which is bounded by the edge count.
    """
    for s in range(starts.shape[0]):
        u = starts[s]
        ru = rank[u]
        nt = 0
        wedges = 0
        for i in range(offsets[u], offsets[u + 1]):
            v = neighbors[i]
            if rank[v] >= ru:
                break
            for j in range(offsets[v], offsets[v + 1]):
                w = neighbors[j]
                if rank[w] >= ru:
                    break
                if count[w] == 0:
                    touched[nt] = w
                    nt += 1
                count[w] += 1
                wedges += 1
        # lay out H(w) lists contiguously
        pos = 0
        for t in range(nt):
            w = touched[t]
            slot[w] = pos
            pos += count[w]
        for i in range(offsets[u], offsets[u + 1]):
            v = neighbors[i]
            if rank[v] >= ru:
                break
            suv = signs[i]
            for j in range(offsets[v], offsets[v + 1]):
                w = neighbors[j]
                if rank[w] >= ru:
                    break
                k = slot[w]
                mid_vertex[k] = v
                mid_sign_uv[k] = suv
                mid_sign_vw[k] = signs[j]
                slot[w] = k + 1
        balanced = 0
        unbalanced = 0
        pairs = 0
        for t in range(nt):
            w = touched[t]
            hi = slot[w]
            lo = hi - count[w]
            for a in range(lo, hi):
                sa = mid_sign_uv[a] * mid_sign_vw[a]
                for b in range(a + 1, hi):
                    pairs += 1
                    if sa * mid_sign_uv[b] * mid_sign_vw[b] > 0:
                        balanced += 1
                    else:
                        unbalanced += 1
            count[w] = 0
            slot[w] = 0
        out_balanced[u] = balanced
        out_unbalanced[u] = unbalanced
        out_wedges[u] = wedges
        out_pairs[u] = pairs


@njit(cache=True, nogil=True)
def vertex_scan(offsets, neighbors, signs, starts, h1, h2, touched, out_balanced):
    """Balanced butterflies containing each start vertex (no priority pruning)."""
    for s in range(starts.shape[0]):
        u = starts[s]
        nt = 0
        for i in range(offsets[u], offsets[u + 1]):
            v = neighbors[i]
            suv = signs[i]
            for j in range(offsets[v], offsets[v + 1]):
                w = neighbors[j]
                if w == u:
                    continue
                if h1[w] == 0 and h2[w] == 0:
                    touched[nt] = w
                    nt += 1
                if signs[j] == suv:
                    h1[w] += 1
                else:
                    h2[w] += 1
        balanced = 0
        for t in range(nt):
            w = touched[t]
            l = h1[w]
            m = h2[w]
            balanced += l * (l - 1) // 2 + m * (m - 1) // 2
            h1[w] = 0
            h2[w] = 0
        out_balanced[u] = balanced


def bucket_scratch(n):
    return np.zeros(n, np.int64), np.zeros(n, np.int64), np.zeros(n, np.int64)


def base_scratch(n, edge_count):
    m = max(edge_count, 1)
    return (np.zeros(n, np.int64), np.zeros(n, np.int64), np.zeros(n, np.int64),
            np.zeros(m, np.int8), np.zeros(m, np.int8), np.zeros(m, np.int64))
