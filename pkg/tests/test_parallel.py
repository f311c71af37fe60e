import pytest
from hypothesis import given, settings

from signed_butterfly import (Guided, ParallelConfig, Static, SyntheticSpec, bb_bucket,
                              generate_random_bipartite, par_bb_bucket)
from signed_butterfly.parallel import THREADS_ENV, guided_chunks, static_chunks

from strategies import synthetic_graphs

CONFIGS = [ParallelConfig(w, c) for w in (1, 2, 3, 4, 8) for c in (Static(), Guided(1), Guided(16))]


def test_single_worker_equals_sequential():
    g = generate_random_bipartite(SyntheticSpec(40, 30, 0.3, 0.5, 5))
    seq = bb_bucket(g)
    par = par_bb_bucket(g, ParallelConfig(1))
    assert par.counts() == seq.counts()
    assert par.wedges_processed == seq.wedges_processed
    assert par.workers == 1


@pytest.mark.parametrize("config", CONFIGS, ids=repr)
def test_schedule_independent(config):
    g = generate_random_bipartite(SyntheticSpec(60, 45, 0.25, 0.5, 12))
    seq = bb_bucket(g)
    par = par_bb_bucket(g, config)
    assert par.counts() == seq.counts()
    assert par.wedges_processed == seq.wedges_processed


def test_200x200_sweep():
    g = generate_random_bipartite(SyntheticSpec(200, 200, 0.1, 0.5, 99))
    expected = bb_bucket(g).counts()
    for workers in (2, 4, 8):
        for _ in range(2):
            assert par_bb_bucket(g, ParallelConfig(workers)).counts() == expected


@settings(max_examples=40)
@given(synthetic_graphs())
def test_random_graphs_any_worker_count(g):
    expected = bb_bucket(g).counts()
    for workers in (2, 3):
        assert par_bb_bucket(g, ParallelConfig(workers, Static())).counts() == expected
        assert par_bb_bucket(g, ParallelConfig(workers, Guided(2))).counts() == expected


def test_chunks_cover_every_vertex_once():
    g = generate_random_bipartite(SyntheticSpec(50, 70, 0.2, 0.5, 1))
    for chunks in (static_chunks(g.vertex_count, 3), guided_chunks(g, 4, 5)):
        flat = sorted(v for c in chunks for v in c.tolist())
        assert flat == list(range(g.vertex_count))


def test_guided_orders_heavy_vertices_first():
    g = generate_random_bipartite(SyntheticSpec(50, 70, 0.2, 0.5, 1))
    chunks = guided_chunks(g, 2, 4)
    first = chunks[0]
    assert g.degree[first].min() >= g.degree[chunks[-1]].max()
    assert len(chunks[0]) >= len(chunks[-1])


def test_config_validation(monkeypatch):
    with pytest.raises(ValueError):
        ParallelConfig(0)
    with pytest.raises(ValueError):
        ParallelConfig(2, Guided(0))
    monkeypatch.setenv(THREADS_ENV, "3")
    assert ParallelConfig.from_env().worker_count == 3
