"""Exact threshold burning and bootstrap percolation on small graphs."""

from ._core import (
    Graph,
    LimitError,
    __version__,
    burning_number,
    cartesian_of,
    closed_form,
    connected_graphs,
    construct_sequence,
    corona_of,
    corona_sequence,
    drop_one_edge,
    family,
    family_vertex_count,
    join_of,
    lower_bound,
    min_dominating_set,
    min_percolating,
    necessity_check,
    percolate,
    random_connected,
    run_suite,
    sandwich,
    simulate,
    source_number,
    structural_stats,
    wheel_gap_instance,
)

__all__ = [
    "Graph",
    "LimitError",
    "__version__",
    "burning_number",
    "cartesian_of",
    "closed_form",
    "connected_graphs",
    "construct_sequence",
    "corona_of",
    "corona_sequence",
    "drop_one_edge",
    "family",
    "family_vertex_count",
    "join_of",
    "lower_bound",
    "min_dominating_set",
    "min_percolating",
    "necessity_check",
    "percolate",
    "random_connected",
    "run_suite",
    "sandwich",
    "simulate",
    "source_number",
    "structural_stats",
    "wheel_gap_instance",
]
