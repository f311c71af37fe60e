"""One-shot sparsification estimate of the balanced butterfly count.

Every edge is kept independently with probability ``rho``.  A butterfly
survives only if all four of its edges do, which happens with
probability ``rho**4``, so the sampled count scaled by ``rho**-4`` is an
unbiased estimate of the full count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRhoError, InvalidTrialsError
from .exact import bb_bucket
from .graph import SignedBipartiteGraph
from .ingest import SeedLike, uniforms


@dataclass(frozen=True)
class EstimateReport:
    rho: float
    trials: int
    seed: int
    estimates: tuple[float, ...]

    @property
    def mean(self) -> float:
        return float(np.mean(self.estimates))

    @property
    def sample_stddev(self) -> float:
        if self.trials < 2:
            return 0.0
        return float(np.std(self.estimates, ddof=1))

    @property
    def standard_error(self) -> float:
        return self.sample_stddev / math.sqrt(self.trials)

    def as_dict(self) -> dict:
        return {
            "rho": self.rho,
            "trials": self.trials,
            "seed": self.seed,
            "mean": self.mean,
            "sample_stddev": self.sample_stddev,
            "estimates": list(self.estimates),
        }


def _check_rho(rho):
    if not (isinstance(rho, (int, float)) and 0.0 < rho <= 1.0):
        raise InvalidRhoError(f"rho must lie in (0, 1], got {rho}")


def sparsify(graph: SignedBipartiteGraph, rho: float, seed: SeedLike) -> SignedBipartiteGraph:
    """Keep each edge with probability ``rho``; vertex sets and signs are unchanged.

    Edges draw one variate each, in (left, right) order.
    """
    _check_rho(rho)
    keep = uniforms(graph.edge_count, seed) < rho
    return graph.edge_subgraph(keep)


def estimate_balanced(graph: SignedBipartiteGraph, rho: float, trials: int, seed: int) -> EstimateReport:
    """Independent sparsified counts; trial ``t`` samples with seed ``(seed, t)``."""
    _check_rho(rho)
    if not isinstance(trials, int) or trials < 1:
        raise InvalidTrialsError(f"trials must be a positive integer, got {trials}")
    scale = rho ** -4
    estimates = []
    for t in range(trials):
        sample = sparsify(graph, rho, (seed, t))
        estimates.append(bb_bucket(sample).balanced * scale)
    return EstimateReport(float(rho), trials, seed, tuple(estimates))
