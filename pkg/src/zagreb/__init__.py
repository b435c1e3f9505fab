"""Zagreb indices: exact comparison, bounds, counterexample families and
exhaustive verification on small graphs."""

from .bounds import (
    BoundCheck,
    check_common_upper,
    check_das_upper,
    check_m1_lower,
    check_m2_lower,
    check_subdivision_theorem,
    check_variable_lower,
    check_variable_upper,
)
from .enumeration import ScanConfig, ScanReport, enumerate_labeled, find_min_counterexample, scan
from .families import (
    FamilySpec,
    ThresholdResult,
    build_counterexample_family,
    build_disconnected_counterexample,
    build_named,
    subdivide,
    threshold_a,
)
from .graph import Graph, GraphClass, build_graph, classify, disjoint_union
from .graph_io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .indices import (
    IndexReport,
    VariableIndexValue,
    Verdict,
    compare_indices,
    first_zagreb,
    second_zagreb,
    variable_first_zagreb,
    variable_second_zagreb,
)

__version__ = "0.1.0"
