"""Minimal and locally minimal spanning trees of finite metric spaces and of
prefixes of countable ones: exactness and bottleneck certificates, the
one-pass exactification procedure, and the path-sum / path-max metrics of
weighted trees."""

__version__ = "0.1.0"

from .metric_core import (CountableSpace, MetricAxiomError, MetricFormatError, MetricSpace,
                          PreconditionError, SetDistanceResult, Violation, check_metric_axioms,
                          prefix, set_distance)
from .tree_core import (CutPartition, CycleError, NotAnEdgeError, Tree, TreeError, cross_edge_count,
                        cut_partition, cut_partition_set, edge, path, swap_edge, tree_length)
from .derived_metrics import (WeightedTree, in_DT, rho1, rho1_all_pairs, rho_inf, rho_inf_all_pairs,
                              rho_space, sample_metric_in_DT)
from .certify import (Certificate, Graph, Verdict, connectivity, gmin_graph, is_exact_edge,
                      verify_locally_minimal, verify_mst_by_bottleneck, verify_mst_by_exactness)
from .exactify import ExactifyTrace, exactify, exactify_step, kruskal, lemma_epartit_probe
from .fixtures import FixtureMeta, fixture, fixture_names, random_space, unique_pair_probe
