"""chardeg: exact character degrees of symmetric and alternating groups
and their double covers, plus a verification suite for the arithmetic
facts those degree sets satisfy."""

from .degrees import DegreeEngine, degree, divide_filter, divisibility_maximal
from .groups import (DegreeSet, GroupKind, GroupTag, MinimalDegreeTable,
                     QuotientSet, alternating, cover_alternating,
                     cover_symmetric, symmetric)
from .partitions import (conjugate, hook_lengths, is_self_conjugate,
                         partition_count, partitions, strict_partitions)
from .spin import SpinDegreeRecord, bar_quotient, faithful_degree_set, spin_degrees
from .suite import run_all, run_check
from .verdict import LemmaVerdict, Status, Witness, render_report

__version__ = "0.1.0"

__all__ = [
    "DegreeEngine", "DegreeSet", "GroupKind", "GroupTag", "LemmaVerdict",
    "MinimalDegreeTable", "QuotientSet", "SpinDegreeRecord", "Status",
    "Witness", "alternating", "bar_quotient", "conjugate",
    "cover_alternating", "cover_symmetric", "degree", "divide_filter",
    "divisibility_maximal", "faithful_degree_set", "hook_lengths",
    "is_self_conjugate", "partition_count", "partitions", "render_report",
    "run_all", "run_check", "spin_degrees", "strict_partitions", "symmetric",
]
