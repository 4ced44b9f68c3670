"""Singular Ramsey and singular Turán numbers of small graphs.

A copy of a pattern in a host graph is k-singular when its host degrees are
all equal or pairwise at least k apart.  The package builds, verifies and
certifies extremal graphs for these problems.
"""

from __future__ import annotations

from ._version import __version__
from .canon import canonical_form, canonical_labeling, is_isomorphic
from .constructions import BUILDERS, ConstructionReport, run_builder, substitute
from .enumeration import (
    RGraphCatalog,
    enumerate_r_graphs,
    generate_all,
    is_ramsey_stable,
    ramsey_number,
    stability_report,
    sweep_sr,
)
from .graph import Graph, GraphError
from .patterns import parse_pattern
from .search import (
    Certificate,
    ClassProfile,
    SearchConfig,
    certify_rs,
    class_profiles,
    csp_search,
    exhaustive_no_sr,
    max_classes_bound,
    quadratic_upper_bound,
    substitution_search,
)
from .singular import extract_singular, find_singular_copy, is_k_singular, is_sr_graph
from .turan import ts_exact, ts_gap_report, ts_lower, turan_number

__all__ = [
    "BUILDERS",
    "Certificate",
    "ClassProfile",
    "ConstructionReport",
    "Graph",
    "GraphError",
    "RGraphCatalog",
    "SearchConfig",
    "__version__",
    "canonical_form",
    "canonical_labeling",
    "certify_rs",
    "class_profiles",
    "csp_search",
    "enumerate_r_graphs",
    "exhaustive_no_sr",
    "extract_singular",
    "find_singular_copy",
    "generate_all",
    "is_isomorphic",
    "is_k_singular",
    "is_ramsey_stable",
    "is_sr_graph",
    "max_classes_bound",
    "parse_pattern",
    "quadratic_upper_bound",
    "ramsey_number",
    "run_builder",
    "stability_report",
    "substitute",
    "substitution_search",
    "sweep_sr",
    "ts_exact",
    "ts_gap_report",
    "ts_lower",
    "turan_number",
]
