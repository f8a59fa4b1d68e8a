"""Search for exceptional values: n whose only ESP solution is (2, n; n-2).

The known exceptional values are {2, 3, 4, 6, 24, 114, 174, 444}.  For
n > 2 to be exceptional, n-1 must be prime (otherwise S_2(n) already has
a second element), and in fact a Sophie Germain prime; scans use that as
a cheap necessary-condition filter and bail out of each candidate at the
first non-basic solution found.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .base_sets import is_prime
from .core import DomainError, Solution, is_basic
from .solver import MemoStore, calc_shell


def is_sophie_germain(p: int) -> bool:
    """True iff p and 2p+1 are both prime."""
    return is_prime(p) and is_prime(2 * p + 1)


def _first_shell_member(n: int, r: int) -> Solution | None:
    """First solution with exactly r non-unit components, or None.

    Walks ascending (r-1)-prefixes of non-unit components directly,
    solving for the largest component w = (sum + n - r) / (product - 1).
    Every branch whose minimal completed product would exceed 2n is cut
    (no common value can), which keeps an exhaustive miss to a few
    thousand steps even for n around 10^5 -- sweeping the recursive
    subproblem window instead is quadratic in n when the shell is empty.
    """
    cap = 2 * n

    def walk(prefix: list[int], total: int, prod: int, lo: int) -> Solution | None:
        if len(prefix) == r - 1:
            den = prod - 1
            num = total + n - r
            if num % den == 0:
                w = num // den
                if w >= prefix[-1]:
                    return Solution(tuple(prefix) + (w,), n - r)
            return None
        slots_left = r - 1 - len(prefix)  # prefix slots still open, plus w
        for x in range(lo, n + 1):
            nxt = prod * x
            if nxt * x**slots_left > cap:
                break
            prefix.append(x)
            hit = walk(prefix, total + x, nxt, x)
            prefix.pop()
            if hit is not None:
                return hit
        return None

    return walk([], 0, 1, 2)


def find_first_nonbasic(n: int, memo: MemoStore | None = None) -> Solution | None:
    """Return some non-basic ESP solution for n variables, or None.

    Cheap exit first: S_2(n) has a second element exactly when n-1 is
    composite, and no higher shell is touched in that case.  Otherwise the
    shells r = 3, 4, ... are swept with the recursive construction,
    stopping at the first successful extension.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if memo is None:
        memo = MemoStore()
    s2 = calc_shell(n, 2, memo)
    nonbasic = min(
        (s for s in s2 if not is_basic(s)), key=lambda s: s.nonunit, default=None
    )
    if nonbasic is not None:
        return nonbasic
    m = n.bit_length() - 1
    for r in range(3, m + 2):
        hit = _first_shell_member(n, r)
        if hit is not None:
            return hit
    return None


def is_exceptional(n: int, memo: MemoStore | None = None) -> bool:
    """True iff the basic solution is the only ESP solution for n."""
    return find_first_nonbasic(n, memo) is None


@dataclass
class ScanReport:
    """Outcome of an exceptional-value scan over [lo, hi]."""

    lo: int
    hi: int
    sg_candidates: int
    exceptional: list[int] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def as_dict(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "sg_candidates": self.sg_candidates,
            "exceptional": self.exceptional,
            "elapsed_ms": self.elapsed_ms,
        }


def _candidates(lo: int, hi: int, use_sg_filter: bool) -> list[int]:
    # n=2 is exceptional yet n-1=1 is not prime; always a candidate.
    out = [2] if lo <= 2 <= hi else []
    test = is_sophie_germain if use_sg_filter else is_prime
    out.extend(n for n in range(max(lo, 3), hi + 1) if test(n - 1))
    return out


def _scan_chunk(candidates: list[int]) -> list[int]:
    memo = MemoStore()
    return [n for n in candidates if find_first_nonbasic(n, memo) is None]


def scan_exceptional(
    lo: int, hi: int, use_sg_filter: bool = True, workers: int = 1
) -> ScanReport:
    """Scan [lo, hi] for exceptional values.

    With the filter on, only n=2 and n with n-1 a Sophie Germain prime are
    tested; with it off, every n with n-1 prime is.  The filter is a
    proven necessary condition, so both modes find the same values.
    """
    if lo < 2 or lo > hi:
        raise DomainError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    start = time.perf_counter()
    candidates = _candidates(lo, hi, use_sg_filter)
    sg_count = len(_candidates(lo, hi, True)) if not use_sg_filter else len(candidates)
    if workers > 1 and len(candidates) > 1:
        chunk = -(-len(candidates) // workers)
        chunks = [candidates[i : i + chunk] for i in range(0, len(candidates), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_chunk, chunks)
        exceptional = sorted(n for part in parts for n in part)
    else:
        exceptional = _scan_chunk(candidates)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return ScanReport(lo, hi, sg_count, exceptional, elapsed_ms)
