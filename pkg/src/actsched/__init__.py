"""Exact solvers for constrained activity scheduling over time and space."""
from actsched.anchored import (
    AnchoredInstance,
    solve_anchored,
    solve_anchored_exact_length,
    solve_anchored_no_upper,
)
from actsched.core import UNREACHABLE, InstanceError, InvariantError, LimitError, MonotoneDeque, PrefixSums
from actsched.count import CountInstance, CountSolution, solve_max_count
from actsched.lexmin import LexMinInstance, LexMinSolution, solve_lexmin, solve_lexmin_simple
from actsched.polygon import PartitionSolution, PolygonInstance, solve_partition
from actsched.submatrix import GridInstance, RectResult, solve_submatrix
from actsched.window import WindowInstance, WindowSolution, solve_window, solve_window_simple

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "InstanceError",
    "InvariantError",
    "LimitError",
    "MonotoneDeque",
    "PrefixSums",
    "WindowInstance",
    "WindowSolution",
    "solve_window",
    "solve_window_simple",
    "AnchoredInstance",
    "solve_anchored",
    "solve_anchored_no_upper",
    "solve_anchored_exact_length",
    "CountInstance",
    "CountSolution",
    "solve_max_count",
    "LexMinInstance",
    "LexMinSolution",
    "solve_lexmin",
    "solve_lexmin_simple",
    "PolygonInstance",
    "PartitionSolution",
    "solve_partition",
    "GridInstance",
    "RectResult",
    "solve_submatrix",
]
