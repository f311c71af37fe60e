from itertools import combinations

import pytest
from hypothesis import given, settings

from signed_butterfly import (Metric, Sign, bb_bucket, build_graph, pair_collaboration,
                              parse_edge_list, per_vertex_counts, positive_butterflies_per_vertex,
                              positive_subgraph, top_k)
from signed_butterfly.errors import IdenticalVerticesError, SamePartitionRequiredError
from signed_butterfly.exact import brute_force_per_vertex, iter_butterflies
from signed_butterfly.graph import Partition

from strategies import signed_graphs

P, N = Sign.POSITIVE, Sign.NEGATIVE

# actor <TAB> movie <TAB> 1 if the movie's rating is >= 6 else 0
ACTORS = """\
% actor movie sign
depp\tpirates\t1
depp\tcharlie\t1
depp\tmortdecai\t0
depp\tsweeney\t1
bloom\tpirates\t1
bloom\ttroy\t1
bloom\tsweeney\t1
knightley\tpirates\t1
knightley\tpride\t1
knightley\tcharlie\t0
rush\tpirates\t1
rush\tsweeney\t1
rush\tmortdecai\t0
bonham\tsweeney\t1
bonham\tcharlie\t1
bonham\tpirates\t0
highmore\tcharlie\t1
highmore\tpride\t0
"""


@pytest.fixture
def actors():
    return parse_edge_list(ACTORS)


def complete(left, right, sign=P):
    return build_graph(left, right, [(i, j, sign) for i in range(left) for j in range(right)])


def test_positive_subgraph_cases():
    g = complete(2, 3)
    assert positive_subgraph(g) == g
    assert positive_subgraph(complete(2, 3, N)).edge_count == 0
    mixed = build_graph(2, 2, [(0, 0, N), (0, 1, P), (1, 0, P), (1, 1, P)])
    sub = positive_subgraph(mixed)
    assert sub.edge_count == 3
    assert (sub.left_count, sub.right_count) == (2, 2)
    assert bb_bucket(sub).total == 0


def test_positive_butterflies_small():
    assert positive_butterflies_per_vertex(complete(2, 2)) == {0: 1, 1: 1, 2: 1, 3: 1}
    g = build_graph(2, 2, [(0, 0, P), (0, 1, N), (1, 0, P), (1, 1, P)])
    assert positive_butterflies_per_vertex(g)[0] == 0


def _oracle_positive_per_vertex(g):
    return brute_force_per_vertex(positive_subgraph(g))


def test_actor_fixture(actors):
    counts = positive_butterflies_per_vertex(actors)
    assert counts == _oracle_positive_per_vertex(actors)
    # depp pairs with bloom and rush on {pirates, sweeney}, with bonham on {sweeney, charlie}
    assert counts[0] == 3


@settings(max_examples=80)
@given(signed_graphs())
def test_positive_per_vertex_identity(g):
    counts = positive_butterflies_per_vertex(g)
    assert counts == per_vertex_counts(positive_subgraph(g))
    assert counts == _oracle_positive_per_vertex(g)


def test_pair_collaboration_cases():
    g = complete(2, 2)
    assert pair_collaboration(g, 0, 1) == 1
    assert pair_collaboration(g, g.right(0), g.right(1)) == 1
    one = build_graph(2, 2, [(0, 0, P), (1, 0, P), (0, 1, P)])
    assert pair_collaboration(one, 0, 1) == 0
    none = build_graph(2, 2, [(0, 0, P), (1, 1, P)])
    assert pair_collaboration(none, 0, 1) == 0


def test_pair_collaboration_errors():
    g = complete(2, 2)
    with pytest.raises(SamePartitionRequiredError):
        pair_collaboration(g, 0, 2)
    with pytest.raises(IdenticalVerticesError):
        pair_collaboration(g, 1, 1)


@settings(max_examples=80)
@given(signed_graphs())
def test_pair_collaboration_against_enumeration(g):
    pos = positive_subgraph(g)
    shared = {}
    for ui, uj, vi, vj, _ in iter_butterflies(pos):
        shared[(ui, uj)] = shared.get((ui, uj), 0) + 1
    total = 0
    for a, b in combinations(range(g.left_count), 2):
        c = pair_collaboration(g, a, b)
        assert c == shared.get((a, b), 0)
        total += c
    assert total == bb_bucket(pos).total


def test_top_k_degree_k22():
    ranked = top_k(complete(2, 2), Metric.POSITIVE_DEGREE, 2)
    assert ranked.entries == ((0, 2), (1, 2))
    full = top_k(complete(2, 2), "pos-degree", 10)
    assert full.entries == ((0, 2), (1, 2), (2, 2), (3, 2))


def _oracle_ranking(scores, pool, k):
    best = []
    remaining = list(pool)
    while remaining and len(best) < k:
        top = remaining[0]
        for g in remaining:
            if scores[g] > scores[top] or (scores[g] == scores[top] and g < top):
                top = g
        best.append((top, scores[top]))
        remaining.remove(top)
    return tuple(best)


def test_top_k_actor_fixture(actors):
    L = actors.left_count
    bfly = _oracle_positive_per_vertex(actors)
    ranked = top_k(actors, Metric.POSITIVE_BUTTERFLIES, 3, partition=Partition.LEFT)
    assert ranked.entries == _oracle_ranking(bfly, range(L), 3)
    assert ranked.labels[0] == actors.label(ranked.entries[0][0])
    degree = {g: sum(1 for _, s in actors.neighbors_of(g) if s is P)
              for g in range(actors.vertex_count)}
    ranked = top_k(actors, Metric.POSITIVE_DEGREE, 4)
    assert ranked.entries == _oracle_ranking(degree, range(actors.vertex_count), 4)


def test_top_k_handcrafted_6x8():
    edges = [(i, j, P if (i + j) % 3 else N) for i in range(6) for j in range(8) if (i * j) % 4 != 1]
    g = build_graph(6, 8, edges)
    bfly = _oracle_positive_per_vertex(g)
    ranked = top_k(g, "pos-butterfly", 5)
    assert ranked.entries == _oracle_ranking(bfly, range(g.vertex_count), 5)
    scores = [s for _, s in ranked.entries]
    assert scores == sorted(scores, reverse=True)


def test_top_k_id_map_labels():
    ranked = top_k(complete(2, 2), "pos-degree", 2, id_map={0: "zero", 1: "one"})
    assert ranked.labels == ("zero", "one")


def test_top_k_rejects_zero():
    with pytest.raises(ValueError):
        top_k(complete(2, 2), "pos-degree", 0)
