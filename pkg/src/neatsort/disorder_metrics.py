"""Eleven presortedness measures, plus brute-force oracles for testing.

All functions accept a plain sequence of keys.  Duplicate keys are
disambiguated internally by replacing x_i with the pair (x_i, i), which
turns any input into a sequence of distinct, totally ordered items without
changing the relative order of distinct keys.
"""

from __future__ import annotations

import math
from bisect import bisect_left, insort
from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple

from .baselines import build_encroaching_lists
from .core_sort import Element, SortStats

SMS_EXACT_LIMIT = 9


def _distinct(xs: Sequence) -> List[Tuple]:
    return [(x, i) for i, x in enumerate(xs)]


def _ranks(xs: Sequence) -> List[int]:
    """Position each item would occupy in the sorted order (0-based)."""
    d = _distinct(xs)
    order = sorted(range(len(d)), key=d.__getitem__)
    ranks = [0] * len(d)
    for pos, idx in enumerate(order):
        ranks[idx] = pos
    return ranks


# ---------------------------------------------------------------------------
# Pairwise measures


def inv(xs: Sequence) -> int:
    """Number of inverted pairs, counted by merge sort in O(n log n)."""
    a = _distinct(xs)

    def count(lo, hi):
        if hi - lo <= 1:
            return a[lo:hi], 0
        mid = (lo + hi) // 2
        left, cl = count(lo, mid)
        right, cr = count(mid, hi)
        merged = []
        inversions = cl + cr
        i = k = 0
        while i < len(left) and k < len(right):
            if left[i] <= right[k]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[k])
                k += 1
                inversions += len(left) - i
        merged.extend(left[i:])
        merged.extend(right[k:])
        return merged, inversions

    if not a:
        return 0
    return count(0, len(a))[1]


def inv_oracle(xs: Sequence) -> int:
    a = _distinct(xs)
    return sum(1 for i, j in combinations(range(len(a)), 2) if a[i] > a[j])


def dis(xs: Sequence) -> int:
    """Largest index distance j - i over inverted pairs (i, j)."""
    a = _distinct(xs)
    n = len(a)
    if n == 0:
        return 0
    # prefix_max[i] = max of a[0..i]; nondecreasing, so the earliest index
    # holding a value greater than a[j] is found by bisection.
    prefix_max = []
    cur = a[0]
    for x in a:
        if x > cur:
            cur = x
        prefix_max.append(cur)
    best = 0
    for j in range(1, n):
        if prefix_max[j - 1] > a[j]:
            i = bisect_left(prefix_max, a[j], 0, j)
            # prefix_max[i] >= a[j]; a[j] itself never appears before j.
            if j - i > best:
                best = j - i
    return best


def dis_oracle(xs: Sequence) -> int:
    a = _distinct(xs)
    return max(
        (j - i for i, j in combinations(range(len(a)), 2) if a[i] > a[j]),
        default=0,
    )


def max_disp(xs: Sequence) -> int:
    """Largest |sorted position - current position| over all elements."""
    return max((abs(r - i) for i, r in enumerate(_ranks(xs))), default=0)


def exc(xs: Sequence) -> int:
    """Minimum exchanges to sort: n minus the number of permutation cycles."""
    ranks = _ranks(xs)
    n = len(ranks)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if seen[i]:
            continue
        cycles += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = ranks[j]
    return n - cycles


def rem(xs: Sequence) -> int:
    """Minimum removals to leave a sorted subsequence: n - LIS length."""
    a = _distinct(xs)
    tails: List[Tuple] = []
    for x in a:
        pos = bisect_left(tails, x)
        if pos == len(tails):
            tails.append(x)
        else:
            tails[pos] = x
    return len(a) - len(tails)


def runs(xs: Sequence) -> int:
    """Number of step-downs (boundaries between maximal ascending runs)."""
    a = _distinct(xs)
    return sum(1 for i in range(len(a) - 1) if a[i] > a[i + 1])


def sus(xs: Sequence) -> int:
    """Minimum ascending-subsequence cover.

    By Dilworth's theorem this equals the length of a longest strictly
    decreasing subsequence, computed with patience bisection on the
    reversed sequence.
    """
    a = _distinct(xs)
    if not a:
        return 0
    # Longest strictly decreasing subsequence of a == longest strictly
    # increasing subsequence of reversed(a).
    tails: List[Tuple] = []
    for x in reversed(a):
        pos = bisect_left(tails, x)
        if pos == len(tails):
            tails.append(x)
        else:
            tails[pos] = x
    return len(tails)


def sus_oracle(xs: Sequence) -> int:
    """Exhaustive minimum partition into ascending subsequences (n <= 10)."""
    a = _distinct(xs)
    if not a:
        return 0

    best = [len(a)]

    def extend(idx: int, chains: List[Tuple]):
        if len(chains) >= best[0]:
            return
        if idx == len(a):
            best[0] = min(best[0], len(chains))
            return
        x = a[idx]
        for c in range(len(chains)):
            if chains[c] < x:
                saved = chains[c]
                chains[c] = x
                extend(idx + 1, chains)
                chains[c] = saved
        chains.append(x)
        extend(idx + 1, chains)
        chains.pop()

    extend(0, [])
    return best[0]


def sms(xs: Sequence) -> Tuple[int, bool]:
    """Minimum monotone-subsequence cover; (value, exact?).

    Exhaustive search up to SMS_EXACT_LIMIT elements, first-fit greedy
    upper bound beyond that.
    """
    a = _distinct(xs)
    n = len(a)
    if n == 0:
        return 0, True
    if n <= SMS_EXACT_LIMIT:
        return _sms_exact(a), True
    return _sms_greedy(a), False


def _sms_exact(a: List[Tuple]) -> int:
    best = [len(a)]

    def extend(idx: int, chains: List[Tuple]):
        # chains[c] = (last value, direction); direction: 0 undecided,
        # 1 ascending, -1 descending.
        if len(chains) >= best[0]:
            return
        if idx == len(a):
            best[0] = len(chains)
            return
        x = a[idx]
        for c in range(len(chains)):
            last, direction = chains[c]
            if direction >= 0 and last < x:
                chains[c] = (x, 1)
                extend(idx + 1, chains)
                chains[c] = (last, direction)
            elif direction <= 0 and last > x:
                chains[c] = (x, -1)
                extend(idx + 1, chains)
                chains[c] = (last, direction)
        chains.append((x, 0))
        extend(idx + 1, chains)
        chains.pop()

    extend(0, [])
    return best[0]


def _sms_greedy(a: List[Tuple]) -> int:
    chains: List[Tuple] = []  # (last value, direction)
    for x in a:
        placed = False
        for c in range(len(chains)):
            last, direction = chains[c]
            if direction >= 0 and last < x:
                chains[c] = (x, 1)
                placed = True
                break
            if direction <= 0 and last > x:
                chains[c] = (x, -1)
                placed = True
                break
        if not placed:
            chains.append((x, 0))
    return len(chains)


def sms_oracle(xs: Sequence) -> int:
    """Alias for the exhaustive branch, usable regardless of length."""
    return _sms_exact(_distinct(xs))


def enc(xs: Sequence) -> int:
    """Number of encroaching lists built by the melsort distribution phase.

    Keys pass through the (x_i, i) distinctness device first, so equal keys
    never force extra lists; on distinct keys this matches melsort exactly.
    """
    buf = [Element(x, i) for i, x in enumerate(_distinct(xs))]
    return len(build_encroaching_lists(buf, SortStats()))


def osc(xs: Sequence) -> int:
    """Oscillation: for every element, count the adjacent-pair intervals
    (x_j, x_{j+1}) that strictly contain it.  O(n log n) via sweeping the
    elements in sorted order while maintaining interval endpoints."""
    a = _distinct(xs)
    n = len(a)
    if n < 3:
        return 0
    # Interval (lo, hi) contributes, for each element v with lo < v < hi,
    # one crossing.  Count via rank arithmetic: elements strictly inside
    # the interval = (# elements < hi) - (# elements <= lo).
    sorted_a = sorted(a)
    total = 0
    for j in range(n - 1):
        lo, hi = a[j], a[j + 1]
        if lo > hi:
            lo, hi = hi, lo
        total += bisect_left(sorted_a, hi) - (bisect_left(sorted_a, lo) + 1)
    return total


def osc_oracle(xs: Sequence) -> int:
    a = _distinct(xs)
    n = len(a)
    total = 0
    for i in range(n):
        for j in range(n - 1):
            lo, hi = a[j], a[j + 1]
            if lo > hi:
                lo, hi = hi, lo
            if lo < a[i] < hi:
                total += 1
    return total


# ---------------------------------------------------------------------------
# Regional insertion measure


@dataclass
class RegTrace:
    """Per-position insertion distances d_i, history depths t_i and regional
    costs r_i (1-based position i = 2..n)."""

    d: List[int]
    t: List[int]
    r: List[int]


def reg(xs: Sequence) -> Tuple[float, int, RegTrace]:
    """Regional-insertion disorder.

    Returns (log_reg, reg_paper, trace) where reg_paper is the literal
    product of (r_i - 1) and log_reg = sum over i >= 2 of log2(r_i + 1),
    the non-degenerate form the adaptivity bounds consume.
    """
    a = _distinct(xs)
    n = len(a)
    d_vals: List[int] = []
    t_vals: List[int] = []
    r_vals: List[int] = []
    for i in range(2, n + 1):  # 1-based position of the element inserted
        xi = a[i - 1]

        def d_ij(j: int) -> int:
            lo, hi = (xi, a[j - 1]) if xi < a[j - 1] else (a[j - 1], xi)
            return 1 + sum(1 for k in range(i - 1) if lo < a[k] < hi)

        d_i = d_ij(i - 1)
        t_i = next(j for j in range(1, i) if d_ij(i - j) == 1)
        r_i = min(t_i + d_i, i - t_i)
        d_vals.append(d_i)
        t_vals.append(t_i)
        r_vals.append(r_i)
    reg_paper = 1 if r_vals else 0
    for r_i in r_vals:
        reg_paper *= r_i - 1
    log_reg = sum(math.log2(r_i + 1) for r_i in r_vals)
    return log_reg, reg_paper, RegTrace(d_vals, t_vals, r_vals)


# ---------------------------------------------------------------------------
# Aggregation


@dataclass
class MetricReport:
    inv: int
    dis: int
    max_disp: int
    exc: int
    rem: int
    runs: int
    sus: int
    sms: int
    sms_exact: bool
    enc: int
    osc: int
    log_reg: float
    reg_paper: int

    def as_lines(self) -> List[str]:
        out = []
        for name in (
            "inv", "dis", "max_disp", "exc", "rem", "runs",
            "sus", "sms", "sms_exact", "enc", "osc", "log_reg", "reg_paper",
        ):
            out.append(f"{name}={getattr(self, name)}")
        return out


def metric_report(xs: Sequence) -> MetricReport:
    sms_val, sms_is_exact = sms(xs)
    log_reg, reg_paper, _ = reg(xs)
    return MetricReport(
        inv=inv(xs),
        dis=dis(xs),
        max_disp=max_disp(xs),
        exc=exc(xs),
        rem=rem(xs),
        runs=runs(xs),
        sus=sus(xs),
        sms=sms_val,
        sms_exact=sms_is_exact,
        enc=enc(xs),
        osc=osc(xs),
        log_reg=log_reg,
        reg_paper=reg_paper,
    )
