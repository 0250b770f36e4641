"""Comparison-exchange network workbench.

Parse and serialize network documents, evaluate networks with fused
non-interfering elements, compute exact exchange statistics by exhaustive
enumeration, verify sorting and selection, rewrite networks, and draw them.
"""

from .core import (
    Element,
    EvalTrace,
    Fused2,
    Fused3,
    Link,
    Network,
    Schedule,
    apply_element,
    decompose,
    mirror,
    network,
    run,
    schedule,
    validate,
)
from .dsl import ParseError, parse, serialize
from .engine import (
    JointSwapTable,
    LimitExceeded,
    StatsReport,
    exhaustive_stats,
    histogram,
    joint_swap_table,
    noninterference_check,
    settled_positions,
    stats_to_json,
    verify_selection,
    verify_sorts,
)
from .transforms import MinimizeResult, deoffend, fuse, minimize_max_swaps, pre_exchange

__version__ = "0.1.0"

__all__ = [
    "Element",
    "EvalTrace",
    "Fused2",
    "Fused3",
    "JointSwapTable",
    "LimitExceeded",
    "Link",
    "MinimizeResult",
    "Network",
    "ParseError",
    "Schedule",
    "StatsReport",
    "apply_element",
    "decompose",
    "deoffend",
    "exhaustive_stats",
    "fuse",
    "histogram",
    "joint_swap_table",
    "minimize_max_swaps",
    "mirror",
    "network",
    "noninterference_check",
    "parse",
    "pre_exchange",
    "run",
    "schedule",
    "serialize",
    "settled_positions",
    "stats_to_json",
    "validate",
    "verify_selection",
    "verify_sorts",
]
