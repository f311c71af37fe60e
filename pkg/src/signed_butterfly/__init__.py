"""Exact and approximate balanced-butterfly counting in signed bipartite graphs."""

from .analytics import (Metric, RankedList, pair_collaboration, positive_butterflies_per_vertex,
                        positive_subgraph, top_k)
from .approx import EstimateReport, estimate_balanced, sparsify
from .exact import (CountReport, WedgeBucketTable, WedgeClass, bb_base, bb_bucket,
                    brute_force_count, classify_wedge, is_balanced, pair_contribution,
                    per_vertex_counts, vbbfc, wedge_buckets)
from .graph import (Partition, PriorityOrder, Sign, SignedBipartiteGraph, VertexRef, build_graph,
                    compute_priority, negate_all, switch_vertex)
from .ingest import (EdgeList, EdgeListFormat, SyntheticSpec, assign_random_signs,
                     assign_threshold_signs, format_signed_tsv, generate_random_bipartite,
                     generate_skewed_bipartite, parse_edge_list, read_edge_list,
                     write_signed_tsv)
from .parallel import Guided, ParallelConfig, Static, par_bb_bucket

__version__ = "0.1.0"
