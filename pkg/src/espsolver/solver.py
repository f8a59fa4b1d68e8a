"""Memoized recursive construction of the solution sets S_r(n).

Each S_r(n) for r >= 3 is generated from the elements of S_{r-1}(r+j) for
j in a small integer window: a base solution with non-unit sum t extends
to an r-component solution exactly when (n - r - j) is divisible by
(t + j), the new component being w = 1 + (n-r-j)/(t+j).

Computed sets, empty or not, are cached in a MemoStore keyed by (n, r) so
shared subproblems are built once.
"""

from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass

from .base_sets import build_s2
from .core import DomainError, Solution, SolutionKey, SolutionSet


@dataclass(frozen=True)
class JRange:
    """The window of unit-count offsets j that can contribute to S_r(n)."""

    j_min: int
    j_max: int

    @property
    def empty(self) -> bool:
        return self.j_min > self.j_max

    def ascending(self) -> range:
        return range(self.j_min, self.j_max + 1)

    def descending(self) -> range:
        return range(self.j_max, self.j_min - 1, -1)


def j_bounds(n: int, r: int) -> JRange:
    """Bounds 2^(r-2) - r <= j <= floor((n - 3r + 2) / 2).

    The floor is toward negative infinity (Python //), which matters when
    the numerator is negative: (n, r) = (4, 3) gives j_max = -2, an empty
    window, so S_3(4) is empty without any enumeration.
    """
    if r < 3:
        raise DomainError(f"r must be >= 3, got {r}")
    return JRange(2 ** (r - 2) - r, (n - 3 * r + 2) // 2)


def extend_candidate(base: Solution, j: int, n: int, r: int) -> Solution | None:
    """Try to extend a base solution in S_{r-1}(r+j) to a member of S_r(n).

    Returns the extended solution when w = 1 + (n-r-j)/(sum(base)+j) is an
    integer >= 2, else None.
    """
    if base.units != j + 1 or base.r != r - 1:
        raise ValueError(
            f"base {base} does not have shape (r-1={r - 1} non-units, "
            f"j+1={j + 1} units)"
        )
    num = n - r - j
    den = sum(base.nonunit) + j
    if num <= 0 or den <= 0 or num % den != 0:
        return None
    w = 1 + num // den
    if w < 2:
        return None
    return Solution(tuple(sorted(base.nonunit + (w,))), n - r)


class MemoStore:
    """Ordered map from SolutionKey to SolutionSet.

    A dict provides the O(1) lookups; a sorted key list maintained by
    binary insertion keeps iteration in key order at O(log m) comparisons
    per insert.  Empty sets are stored like any other so dead-end
    subproblems are never recomputed.

    `extend_evaluations` counts divisibility tests performed on behalf of
    this store; a fully memoized call performs none.
    """

    def __init__(self):
        self._entries: dict[SolutionKey, SolutionSet] = {}
        self._keys: list[SolutionKey] = []
        self.extend_evaluations = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: SolutionKey) -> bool:
        return key in self._entries

    def get(self, key: SolutionKey) -> SolutionSet | None:
        return self._entries.get(key)

    def insert(self, value: SolutionSet) -> None:
        if value.key not in self._entries:
            insort(self._keys, value.key)
        self._entries[value.key] = value

    def keys(self) -> list[SolutionKey]:
        """All stored keys, ascending."""
        return list(self._keys)

    def items(self):
        for key in self._keys:
            yield key, self._entries[key]


def calc_shell(k: int, r: int, memo: MemoStore, *, j_descending: bool = False) -> SolutionSet:
    """Compute S_r(k), consulting and updating the memo store."""
    if k < 2 or r < 2:
        raise DomainError(f"need k >= 2 and r >= 2, got ({k}, {r})")
    key = SolutionKey(k, r)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if r == 2:
        result = build_s2(k)
        memo.insert(result)
        return result
    found = set()
    bounds = j_bounds(k, r)
    if not bounds.empty:
        order = bounds.descending() if j_descending else bounds.ascending()
        for j in order:
            base_set = calc_shell(j + r, r - 1, memo, j_descending=j_descending)
            for base in base_set:
                memo.extend_evaluations += 1
                extended = extend_candidate(base, j, k, r)
                if extended is not None:
                    found.add(extended)
    result = SolutionSet(key, frozenset(found))
    memo.insert(result)
    return result


def calc_solution(
    n: int, memo: MemoStore | None = None, *, j_descending: bool = False
) -> set[Solution]:
    """All ESP solutions for n variables: the union of S_r(n) over
    r = floor(log2 n) + 1 down to 2."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if memo is None:
        memo = MemoStore()
    result: set[Solution] = set()
    m = n.bit_length() - 1  # floor(log2 n), exact
    for r in range(m + 1, 1, -1):
        result |= calc_shell(n, r, memo, j_descending=j_descending).solutions
    return result
