"""Adaptive natural-runs mergesort with instrumented counters.

The sort works in two phases: an analysis pass that partitions the buffer
into maximal nondecreasing runs (reversing strictly descending stretches in
place), and a bottom-up merge phase driven by a pluggable scheduling policy.
All comparisons consult element keys only; tags ride along untouched so
stability can be checked externally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Sequence, Tuple


class Element:
    """An orderable key plus an opaque tag (original index).

    The tag never participates in a comparison; it exists so tests can
    observe stability.
    """

    __slots__ = ("key", "tag")

    def __init__(self, key, tag: int = 0):
        self.key = key
        self.tag = tag

    def __repr__(self):
        return f"Element({self.key!r}, tag={self.tag})"

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.key == other.key
            and self.tag == other.tag
        )

    def __hash__(self):
        return hash((self.key, self.tag))


def wrap(keys: Sequence) -> List[Element]:
    """Tag each key with its position, producing a working buffer."""
    return [Element(k, i) for i, k in enumerate(keys)]


def unwrap(buf: Sequence[Element]) -> list:
    return [e.key for e in buf]


@dataclass
class SortStats:
    comparisons: int = 0
    moves: int = 0
    runs_detected: int = 0
    merge_passes: int = 0
    aux_peak: int = 0


@dataclass(frozen=True)
class Run:
    """Half-open index range [start, end) of a nondecreasing segment."""

    start: int
    end: int

    def __post_init__(self):
        if self.start >= self.end:
            raise ValueError(f"empty run [{self.start}, {self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass
class RunPartition:
    """Contiguous, disjoint runs covering the working buffer exactly."""

    runs: List[Run] = field(default_factory=list)

    def lengths(self) -> List[int]:
        return [r.length for r in self.runs]

    def __len__(self):
        return len(self.runs)


class MergeMode(Enum):
    ADJACENT_PAIRS = "adjacent-pairs"
    LEFTMOST_ALWAYS = "leftmost"
    LEAVE_OUT_LONGEST = "leave-out-longest"
    TRIPLE_P = "triple-p"


@dataclass(frozen=True)
class MergePolicy:
    mode: MergeMode = MergeMode.TRIPLE_P
    p: float = 1.3

    def __post_init__(self):
        if not (1.0 <= self.p <= 2.0):
            raise ValueError(f"p must lie in [1.0, 2.0], got {self.p}")


@dataclass
class MergingPoints:
    """Cut indices decomposing a stable merge into slice concatenations.

    ``j_seq`` indexes the left list, ``k_seq`` the right one; interleaving
    L[0:j_0], R[k_0:k_1], L[j_0:j_1], R[k_1:k_2], ... reproduces the stable
    merge.
    """

    j_seq: List[int]
    k_seq: List[int]


# ---------------------------------------------------------------------------
# Analysis phase


def detect_runs(buf: List[Element], stats: SortStats) -> RunPartition:
    """Partition ``buf`` into nondecreasing runs, reversing descents in place.

    Whenever a freshly started run would be a singleton, the strictly
    descending stretch that follows is absorbed, reversed (3 move counts per
    swap), and then extended forward again.  A new run whose head is >= the
    previous run's tail is fused into it, which keeps the strict head/tail
    ordering between stored neighbours.
    """
    n = len(buf)
    part = RunPartition()
    if n == 0:
        return part
    comparisons = 0
    moves = 0
    i = 0
    while i < n:
        start = i
        while i + 1 < n:
            comparisons += 1
            if buf[i].key <= buf[i + 1].key:
                i += 1
            else:
                break
        if i == start:
            # Singleton: absorb the strictly descending stretch ...
            while i + 1 < n:
                comparisons += 1
                if buf[i].key > buf[i + 1].key:
                    i += 1
                else:
                    break
            # ... reverse it in place (one swap = 3 assignments) ...
            lo, hi = start, i
            while lo < hi:
                buf[lo], buf[hi] = buf[hi], buf[lo]
                moves += 3
                lo += 1
                hi -= 1
            # ... then keep extending while the next element >= the tail.
            while i + 1 < n:
                comparisons += 1
                if buf[i].key <= buf[i + 1].key:
                    i += 1
                else:
                    break
        end = i + 1
        if part.runs:
            prev = part.runs[-1]
            comparisons += 1
            if buf[start].key >= buf[prev.end - 1].key:
                # O(1) fusion: the two ranges are already in order.
                part.runs[-1] = Run(prev.start, end)
                i = end
                continue
        part.runs.append(Run(start, end))
        i = end
    stats.comparisons += comparisons
    stats.moves += moves
    stats.runs_detected = len(part.runs)
    return part


# ---------------------------------------------------------------------------
# Merging


def binary_search_first_greater(
    seq: Sequence[Element], lo: int, hi: int, pivot: Element, stats: SortStats
) -> int:
    """Smallest index in [lo, hi) whose key is > pivot.key, or hi if none.

    ``seq[lo:hi]`` must be nondecreasing.  Costs at most ceil(log2(hi-lo))+1
    comparisons.
    """
    if lo > hi:
        raise ValueError(f"invalid range [{lo}, {hi})")
    pk = pivot.key
    comparisons = 0
    while lo < hi:
        mid = (lo + hi) // 2
        comparisons += 1
        if seq[mid].key > pk:
            hi = mid
        else:
            lo = mid + 1
    stats.comparisons += comparisons
    return lo


def compute_merging_points(
    left: Sequence[Element], right: Sequence[Element]
) -> MergingPoints:
    """Find the cut indices whose slice interleaving is the stable merge.

    The final pair is the sentinel (|left|, |right|); the preceding pairs
    satisfy the two interleaving inequalities.  Pure reference computation
    (no counters); used by tests to check the equations independently of the
    instrumented merge.
    """
    nl, nr = len(left), len(right)
    j_seq: List[int] = []
    k_seq: List[int] = []
    j = 0
    k = 0
    while k < nr:
        # Advance j to the first left element strictly greater than right[k];
        # equal keys stay on the left (stability).
        while j < nl and left[j].key <= right[k].key:
            j += 1
        if j == nl:
            # Remaining right elements follow all of left; the relaxation
            # allows this final pair with j equal to the sentinel.
            j_seq.append(nl)
            k_seq.append(k)
            break
        j_seq.append(j)
        k_seq.append(k)
        # Advance k past every right element smaller than left[j].
        while k < nr and right[k].key < left[j].key:
            k += 1
    j_seq.append(nl)
    k_seq.append(nr)
    return MergingPoints(j_seq, k_seq)


def interleave(
    left: Sequence[Element], right: Sequence[Element], mp: MergingPoints
) -> List[Element]:
    """Concatenate slices in merge order according to ``mp``."""
    t = len(mp.j_seq) - 1  # last pair is the sentinel
    if t == 0:
        # No crossing: left entirely precedes right.
        return list(left) + list(right)
    out: List[Element] = list(left[: mp.j_seq[0]])
    for idx in range(t):
        out.extend(right[mp.k_seq[idx] : mp.k_seq[idx + 1]])
        out.extend(left[mp.j_seq[idx] : mp.j_seq[idx + 1]])
    return out


def neat_merge(
    left: List[Element], right: List[Element], stats: SortStats
) -> List[Element]:
    """Stable merge of two nondecreasing lists, left element first on ties.

    A binary search locates the insertion point of right's head inside left;
    the prefix before it is copied verbatim, and only left's suffix needs a
    temporary buffer (its size is what aux_peak tracks).  Total comparisons
    are at most ceil(log2 |left|) + |left| + |right|.
    """
    nl, nr = len(left), len(right)
    if nl == 0:
        return list(right)
    if nr == 0:
        return list(left)
    # right[0] is known to precede left[-1], so the search may skip the tail.
    j0 = binary_search_first_greater(left, 0, nl - 1, right[0], stats)
    out: List[Element] = left[:j0]
    tmp = left[j0:]
    stats.moves += len(tmp)
    if len(tmp) > stats.aux_peak:
        stats.aux_peak = len(tmp)
    comparisons = 0
    moves = 0
    i = 0
    k = 0
    nt = len(tmp)
    append = out.append
    while i < nt and k < nr:
        comparisons += 1
        if tmp[i].key <= right[k].key:
            append(tmp[i])
            i += 1
        else:
            append(right[k])
            k += 1
        moves += 1
    if i < nt:
        out.extend(tmp[i:])
        moves += nt - i
    else:
        out.extend(right[k:])
        moves += nr - k
    stats.comparisons += comparisons
    stats.moves += moves
    return out


# ---------------------------------------------------------------------------
# Scheduling

MergeInstruction = Tuple[int, int]  # indices of two adjacent runs


def schedule_pass(
    lengths: Sequence[int], policy: MergePolicy
) -> Tuple[List[MergeInstruction], List[int]]:
    """Plan one merge pass: (adjacent pairs to merge, pass-through indices).

    Every run index appears in exactly one instruction or in the
    pass-through list.  With two or more runs at least one merge is always
    scheduled, so repeated passes terminate.
    """
    m = len(lengths)
    if m == 0:
        raise ValueError("lengths must be nonempty")
    if m == 1:
        return [], [0]
    mode = policy.mode
    if mode is MergeMode.LEFTMOST_ALWAYS:
        return [(0, 1)], list(range(2, m))
    if mode is MergeMode.ADJACENT_PAIRS:
        pairs = [(j, j + 1) for j in range(0, m - 1, 2)]
        passthrough = [m - 1] if m % 2 else []
        return pairs, passthrough
    if mode is MergeMode.LEAVE_OUT_LONGEST:
        if m % 2 == 0:
            return [(j, j + 1) for j in range(0, m - 1, 2)], []
        # Odd count: skip the longest run sitting at an even index (both
        # flanks then have even length and pair up fully); ties -> lowest.
        skip = max(range(0, m, 2), key=lambda j: (lengths[j], -j))
        pairs = [(j, j + 1) for j in range(0, skip, 2)]
        pairs += [(j, j + 1) for j in range(skip + 1, m - 1, 2)]
        return pairs, [skip]
    # TRIPLE_P: lengths past the end count as zero, which degenerates to
    # merging the final adjacent pair.
    p = policy.p
    pairs = []
    passthrough = []
    j = 0
    while j < m:
        if j == m - 1:
            passthrough.append(j)
            break
        if j == m - 2:
            pairs.append((j, j + 1))
            break
        if lengths[j] <= p * (lengths[j + 1] + lengths[j + 2]):
            pairs.append((j, j + 1))
            j += 2
        else:
            passthrough.append(j)
            pairs.append((j + 1, j + 2))
            j += 3
    return pairs, passthrough


# ---------------------------------------------------------------------------
# Full sort


def neat_sort(buf: List[Element], policy: MergePolicy = MergePolicy()) -> SortStats:
    """Sort ``buf`` stably in place; returns the populated counters."""
    stats = SortStats()
    n = len(buf)
    if n <= 1:
        stats.runs_detected = n
        return stats
    part = detect_runs(buf, stats)
    segments: List[List[Element]] = [buf[r.start : r.end] for r in part.runs]
    while len(segments) > 1:
        pairs, _ = schedule_pass([len(s) for s in segments], policy)
        merged_into = {a: b for a, b in pairs}
        nxt: List[List[Element]] = []
        idx = 0
        m = len(segments)
        while idx < m:
            if idx in merged_into:
                nxt.append(
                    neat_merge(segments[idx], segments[merged_into[idx]], stats)
                )
                idx += 2
            else:
                nxt.append(segments[idx])
                idx += 1
        segments = nxt
        stats.merge_passes += 1
    if segments:
        result = segments[0]
        buf[:] = result
    return stats


def sort_keys(keys: Sequence, policy: MergePolicy = MergePolicy()) -> Tuple[list, SortStats]:
    """Convenience wrapper: sort plain keys, returning (sorted keys, stats)."""
    buf = wrap(keys)
    stats = neat_sort(buf, policy)
    return unwrap(buf), stats
