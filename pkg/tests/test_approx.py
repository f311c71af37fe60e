import math

import numpy as np
import pytest

from signed_butterfly import (SyntheticSpec, bb_bucket, build_graph, estimate_balanced,
                              generate_random_bipartite, sparsify)
from signed_butterfly.errors import InvalidRhoError, InvalidTrialsError


@pytest.fixture(scope="module")
def g30():
    return generate_random_bipartite(SyntheticSpec(30, 30, 0.5, 0.5, 3))


@pytest.fixture(scope="module")
def g100():
    return generate_random_bipartite(SyntheticSpec(100, 100, 1.0, 0.5, 8))


def test_sparsify_rho_one_keeps_everything(g30):
    assert sparsify(g30, 1.0, 5) == g30


def test_sparsify_half(g100):
    assert g100.edge_count == 10**4
    kept = sparsify(g100, 0.5, 77)
    assert 0.45 <= kept.edge_count / g100.edge_count <= 0.55
    assert (kept.left_count, kept.right_count) == (100, 100)


def test_sparsify_keeps_signs_and_is_deterministic(g30):
    a = sparsify(g30, 0.4, 11)
    assert a == sparsify(g30, 0.4, 11)
    original = {(i, j): s for i, j, s in g30.edges()}
    assert all(original[(i, j)] == s for i, j, s in a.edges())


def test_sparsify_small_rho_mean(g100):
    kept = [sparsify(g100, 0.01, s).edge_count for s in range(50)]
    # expectation rho*|E| = 100, sd of the mean = sqrt(100*0.99/50) ~ 1.4
    assert abs(np.mean(kept) - 100) < 6


@pytest.mark.parametrize("rho", [0.0, -0.1, 1.5, float("nan")])
def test_invalid_rho(g30, rho):
    with pytest.raises(InvalidRhoError):
        sparsify(g30, rho, 0)
    with pytest.raises(InvalidRhoError):
        estimate_balanced(g30, rho, 3, 0)


def test_invalid_trials(g30):
    with pytest.raises(InvalidTrialsError):
        estimate_balanced(g30, 0.5, 0, 0)


def test_rho_one_is_exact(g30):
    exact = bb_bucket(g30).balanced
    report = estimate_balanced(g30, 1.0, 5, 1)
    assert report.estimates == (exact,) * 5
    assert report.mean == exact
    assert report.sample_stddev == 0.0


def test_empty_graph_estimates_zero():
    report = estimate_balanced(build_graph(5, 5, []), 0.5, 4, 0)
    assert report.estimates == (0.0,) * 4


def test_report_statistics_consistent(g30):
    r = estimate_balanced(g30, 0.6, 20, 4)
    assert len(r.estimates) == r.trials == 20
    assert r.mean == pytest.approx(sum(r.estimates) / 20)
    assert r.sample_stddev == pytest.approx(np.std(r.estimates, ddof=1))
    assert r.standard_error == pytest.approx(r.sample_stddev / math.sqrt(20))
    assert estimate_balanced(g30, 0.6, 20, 4) == r


def test_mean_close_to_exact(g30):
    exact = bb_bucket(g30).balanced
    assert exact == 6364  # brute-force oracle value
    r = estimate_balanced(g30, 0.5, 400, 2024)
    assert abs(r.mean - exact) <= 0.10 * exact


@pytest.mark.parametrize("rho", [0.3, 0.5, 0.7])
def test_unbiased(g30, rho):
    exact = bb_bucket(g30).balanced
    r = estimate_balanced(g30, rho, 400, 17)
    assert abs(r.mean - exact) <= 3 * r.standard_error


def test_variance_shrinks_with_rho(g30):
    low = estimate_balanced(g30, 0.3, 400, 5)
    high = estimate_balanced(g30, 0.7, 400, 5)
    assert low.sample_stddev >= high.sample_stddev
