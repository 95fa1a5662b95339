"""Reference sorts used by the benchmark harness.

All of them mutate a list of Element in place and fill a SortStats, so the
harness can treat every algorithm uniformly.  Only merge_sort is stable.
"""

from __future__ import annotations

import random
from typing import List

from .core_sort import Element, SortStats, neat_merge


# ---------------------------------------------------------------------------
# Bottom-up mergesort


def merge_sort(buf: List[Element], stats: SortStats | None = None) -> SortStats:
    """Stable bottom-up mergesort; comparisons <= n * ceil(log2 n)."""
    if stats is None:
        stats = SortStats()
    n = len(buf)
    width = 1
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            buf[lo:hi] = _merge(buf[lo:mid], buf[mid:hi], stats)
        width *= 2
        stats.merge_passes += 1
    return stats


def _merge(left: List[Element], right: List[Element], stats: SortStats) -> List[Element]:
    out: List[Element] = []
    i = k = 0
    nl, nr = len(left), len(right)
    if nl > stats.aux_peak:
        stats.aux_peak = nl
    comparisons = 0
    while i < nl and k < nr:
        comparisons += 1
        if left[i].key <= right[k].key:
            out.append(left[i])
            i += 1
        else:
            out.append(right[k])
            k += 1
    out.extend(left[i:])
    out.extend(right[k:])
    stats.comparisons += comparisons
    stats.moves += nl + nr
    return out


# ---------------------------------------------------------------------------
# Random-pivot quicksort


def quicksort_random(
    buf: List[Element], rng_seed: int = 0, stats: SortStats | None = None
) -> SortStats:
    """In-place quicksort with a seeded uniform pivot choice.  Not stable."""
    if stats is None:
        stats = SortStats()
    rng = random.Random(rng_seed)
    _quicksort(buf, 0, len(buf) - 1, rng, stats, depth_limit=None)
    return stats


def _quicksort(buf, lo, hi, rng, stats, depth_limit):
    while lo < hi:
        if depth_limit is not None:
            if hi - lo + 1 < _INSERTION_CUTOFF:
                _insertion_sort(buf, lo, hi, stats)
                return
            if depth_limit == 0:
                _heapsort(buf, lo, hi, stats)
                return
            depth_limit -= 1
        p = _partition(buf, lo, hi, rng, stats)
        # Recurse on the smaller half to bound stack depth.
        if p - lo < hi - p:
            _quicksort(buf, lo, p - 1, rng, stats, depth_limit)
            lo = p + 1
        else:
            _quicksort(buf, p + 1, hi, rng, stats, depth_limit)
            hi = p - 1


def _partition(buf, lo, hi, rng, stats) -> int:
    pi = rng.randint(lo, hi) if rng is not None else _median_of_three(buf, lo, hi, stats)
    buf[pi], buf[hi] = buf[hi], buf[pi]
    stats.moves += 3
    pivot = buf[hi].key
    store = lo
    comparisons = 0
    moves = 0
    for i in range(lo, hi):
        comparisons += 1
        if buf[i].key < pivot:
            if i != store:
                buf[i], buf[store] = buf[store], buf[i]
                moves += 3
            store += 1
    buf[store], buf[hi] = buf[hi], buf[store]
    moves += 3
    stats.comparisons += comparisons
    stats.moves += moves
    return store


def _median_of_three(buf, lo, hi, stats) -> int:
    mid = (lo + hi) // 2
    a, b, c = buf[lo].key, buf[mid].key, buf[hi].key
    stats.comparisons += 3
    if a <= b:
        if b <= c:
            return mid
        return hi if a <= c else lo
    if a <= c:
        return lo
    return hi if b <= c else mid


# ---------------------------------------------------------------------------
# Introspective hybrid (deterministic qsort stand-in)

_INSERTION_CUTOFF = 16


def introsort_hybrid(buf: List[Element], stats: SortStats | None = None) -> SortStats:
    """Median-of-three quicksort, heapsort below depth 2*floor(log2 n),
    insertion sort under 16 elements.  Deterministic; not stable."""
    if stats is None:
        stats = SortStats()
    n = len(buf)
    if n > 1:
        _quicksort(buf, 0, n - 1, None, stats, depth_limit=2 * (n.bit_length() - 1))
    return stats


def _insertion_sort(buf, lo, hi, stats):
    comparisons = 0
    moves = 0
    for i in range(lo + 1, hi + 1):
        cur = buf[i]
        j = i - 1
        while j >= lo:
            comparisons += 1
            if buf[j].key > cur.key:
                buf[j + 1] = buf[j]
                moves += 1
                j -= 1
            else:
                break
        if j + 1 != i:
            buf[j + 1] = cur
            moves += 1
    stats.comparisons += comparisons
    stats.moves += moves


def _heapsort(buf, lo, hi, stats):
    n = hi - lo + 1

    def sift(start, end):
        root = start
        while 2 * root + 1 <= end:
            child = 2 * root + 1
            if child + 1 <= end:
                stats.comparisons += 1
                if buf[lo + child].key < buf[lo + child + 1].key:
                    child += 1
            stats.comparisons += 1
            if buf[lo + root].key < buf[lo + child].key:
                buf[lo + root], buf[lo + child] = buf[lo + child], buf[lo + root]
                stats.moves += 3
                root = child
            else:
                return

    for start in range(n // 2 - 1, -1, -1):
        sift(start, n - 1)
    for end in range(n - 1, 0, -1):
        buf[lo], buf[lo + end] = buf[lo + end], buf[lo]
        stats.moves += 3
        sift(0, end - 1)


# ---------------------------------------------------------------------------
# Melsort


class EncroachingLists:
    """Double-ended sorted lists built by first-fit head/tail insertion.

    Each incoming element goes to the first list (in creation order) whose
    head it can precede (strict <) or whose tail it can follow (strict >);
    otherwise it opens a new list.
    """

    def __init__(self):
        self.lists: List[List[Element]] = []

    def __len__(self):
        return len(self.lists)

    def insert(self, elem: Element, stats: SortStats) -> None:
        key = elem.key
        for lst in self.lists:
            stats.comparisons += 1
            if key < lst[0].key:
                lst.insert(0, elem)
                stats.moves += 1
                return
            stats.comparisons += 1
            if key > lst[-1].key:
                lst.append(elem)
                stats.moves += 1
                return
        self.lists.append([elem])
        stats.moves += 1


def build_encroaching_lists(
    buf: List[Element], stats: SortStats | None = None
) -> EncroachingLists:
    """Distribution phase shared by melsort and the enc disorder measure."""
    if stats is None:
        stats = SortStats()
    enc = EncroachingLists()
    for elem in buf:
        enc.insert(elem, stats)
    return enc


def melsort(buf: List[Element], stats: SortStats | None = None) -> SortStats:
    """Skiena-style encroaching-lists sort.  Not stable.

    Merge phase: with an odd list count the last list is folded into its
    predecessor, then list i is merged with list count/2 + i and the count
    halves.
    """
    if stats is None:
        stats = SortStats()
    if len(buf) <= 1:
        stats.runs_detected = len(buf)
        return stats
    enc = build_encroaching_lists(buf, stats)
    stats.runs_detected = len(enc)
    lists = enc.lists
    count = len(lists)
    while count > 1:
        if count % 2 == 1:
            lists[count - 2] = neat_merge(lists[count - 2], lists[count - 1], stats)
            count -= 1
        half = count // 2
        for i in range(half):
            lists[i] = neat_merge(lists[i], lists[half + i], stats)
        count = half
        del lists[count:]
        stats.merge_passes += 1
    buf[:] = lists[0]
    return stats
