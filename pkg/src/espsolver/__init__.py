"""Exact solver for the equal-sum-product problem.

Enumerates, for any n >= 2, every n-tuple of positive integers whose sum
equals its product, and searches ranges for exceptional values (n whose
only such tuple is the basic one).
"""

from .base_sets import build_s2, divisors_up_to_sqrt, is_prime
from .core import (
    DomainError,
    InvalidSolutionError,
    Solution,
    SolutionKey,
    SolutionSet,
    common_value,
    compare_keys,
    is_basic,
    validate,
)
from .exceptional import (
    ScanReport,
    find_first_nonbasic,
    is_exceptional,
    is_sophie_germain,
    scan_exceptional,
)
from .oracle import brute_force_solutions
from .solver import (
    JRange,
    MemoStore,
    calc_shell,
    calc_solution,
    extend_candidate,
    j_bounds,
)

__all__ = [
    "DomainError",
    "InvalidSolutionError",
    "JRange",
    "MemoStore",
    "ScanReport",
    "Solution",
    "SolutionKey",
    "SolutionSet",
    "brute_force_solutions",
    "build_s2",
    "calc_shell",
    "calc_solution",
    "common_value",
    "compare_keys",
    "divisors_up_to_sqrt",
    "extend_candidate",
    "find_first_nonbasic",
    "is_basic",
    "is_exceptional",
    "is_prime",
    "is_sophie_germain",
    "j_bounds",
    "scan_exceptional",
    "validate",
]

__version__ = "0.1.0"
