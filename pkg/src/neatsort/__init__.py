"""Adaptive natural-runs sorting, disorder metrics, and a benchmark harness."""

from .core_sort import (
    Element,
    MergeMode,
    MergePolicy,
    MergingPoints,
    Run,
    RunPartition,
    SortStats,
    binary_search_first_greater,
    compute_merging_points,
    detect_runs,
    interleave,
    neat_merge,
    neat_sort,
    schedule_pass,
    sort_keys,
    unwrap,
    wrap,
)

__all__ = [
    "Element",
    "MergeMode",
    "MergePolicy",
    "MergingPoints",
    "Run",
    "RunPartition",
    "SortStats",
    "binary_search_first_greater",
    "compute_merging_points",
    "detect_runs",
    "interleave",
    "neat_merge",
    "neat_sort",
    "schedule_pass",
    "sort_keys",
    "unwrap",
    "wrap",
]
