"""Wiener index of vertex colorings: maximizer constructions on paths and cycles
and an exhaustive oracle to check them."""

from .coloring import Coloring, make_coloring, swap, swap_delta, type_of, wiener_coloring, is_local_weak_max
from .cycles import (
    canonical_good_set,
    equitable_arc_partitions,
    good_partition,
    is_balanced,
    is_good,
    is_set_maximizer_cycle,
    is_weak_max_cycle,
    is_weakly_balanced,
    split_good,
)
from .errors import BudgetError, DomainError, UsageError, WienerError
from .graph import Graph, build_cycle, build_path, graph_from_spec, parse_graph, wiener_set
from .kernels import BACKEND
from .majorization import equitable_tuple, majorizes, r_closure, robin_hood, transfer_chain
from .oracle import EnumerationScope, brute_force_classes, brute_force_set_maximizers, enumerate_colorings
from .paths import block_partition, canonical_Ct_member, capacity_schedule, count_Ct, enumerate_Ct, is_in_Ct, swap_delta_path
from .suites import CLAIMS, VerificationReport, verify

__version__ = "0.1.0"
