"""Seeded input families with controlled disorder.

Every generator emits a permutation of 1..n wrapped as tagged elements
(tags are the original positions).  Identical specs always produce
identical sequences.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from . import disorder_metrics as dm
from .core_sort import Element


class Family(Enum):
    SORTED = "sorted"
    REVERSED = "reversed"
    RANDOM_PERM = "random"
    INVERSION_PCT = "inversion-pct"
    RUNS_PCT = "runs-pct"
    MAXDIST_PCT = "maxdist-pct"
    HALF_ASC_HALF_DESC = "half-asc-desc"

    @property
    def needs_pct(self) -> bool:
        return self in (Family.INVERSION_PCT, Family.RUNS_PCT, Family.MAXDIST_PCT)


class InfeasibleTarget(ValueError):
    """Raised when a disorder target cannot be realised for the given n."""


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    n: int
    target_pct: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.family.needs_pct:
            if self.target_pct is None:
                raise ValueError(f"{self.family.value} requires target_pct")
            if not (0.0 <= self.target_pct <= 100.0):
                raise ValueError("target_pct must lie in [0, 100]")

    def to_json_dict(self) -> Dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "target_pct": self.target_pct,
            "seed": self.seed,
        }

    @classmethod
    def from_json_dict(cls, d: Dict) -> "GeneratorSpec":
        return cls(
            family=Family(d["family"]),
            n=int(d["n"]),
            target_pct=d.get("target_pct"),
            seed=int(d.get("seed", 0)),
        )


def _wrap(keys: List[int]) -> List[Element]:
    return [Element(k, i) for i, k in enumerate(keys)]


def generate(spec: GeneratorSpec) -> List[Element]:
    n = spec.n
    if n == 0:
        return []
    fam = spec.family
    if fam is Family.SORTED:
        return _wrap(list(range(1, n + 1)))
    if fam is Family.REVERSED:
        return _wrap(list(range(n, 0, -1)))
    if fam is Family.RANDOM_PERM:
        keys = list(range(1, n + 1))
        random.Random(spec.seed).shuffle(keys)
        return _wrap(keys)
    if fam is Family.HALF_ASC_HALF_DESC:
        half = n // 2
        keys = list(range(1, half + 1)) + list(range(n, half, -1))
        return _wrap(keys)
    if fam is Family.INVERSION_PCT:
        return _wrap(_inversion_controlled(n, spec.target_pct, spec.seed))
    if fam is Family.RUNS_PCT:
        return _wrap(_runs_controlled(n, spec.target_pct, spec.seed))
    if fam is Family.MAXDIST_PCT:
        return _wrap(_maxdist_controlled(n, spec.target_pct, spec.seed))
    raise ValueError(f"unknown family {fam}")


# ---------------------------------------------------------------------------
# Controlled families


def _inversion_controlled(n: int, pct: float, seed: int) -> List[int]:
    """Permutation with an exact inversion count via a random Lehmer code.

    Position i (0-based) gets a code c_i <= n-1-i equal to the number of
    later, smaller elements; any code summing to the target is decodable,
    so the target count is hit exactly.
    """
    max_inv = n * (n - 1) // 2
    target = round(pct / 100.0 * max_inv)
    rng = random.Random(seed)
    caps = [n - 1 - i for i in range(n)]
    remaining_after = [0] * n  # sum of caps to the right of i
    acc = 0
    for i in range(n - 1, -1, -1):
        remaining_after[i] = acc
        acc += caps[i]
    code = [0] * n
    left = target
    for i in range(n):
        lo = max(0, left - remaining_after[i])
        hi = min(caps[i], left)
        c = rng.randint(lo, hi)
        code[i] = c
        left -= c
    assert left == 0
    return _decode_lehmer(code)


def _decode_lehmer(code: List[int]) -> List[int]:
    """code[i] = rank (0-based) of the value chosen among the unused ones,
    counted from the largest; a Fenwick tree gives O(n log n) selection."""
    n = len(code)
    size = n + 1
    tree = [0] * (size + 1)

    def add(i, delta):
        while i <= size:
            tree[i] += delta
            i += i & (-i)

    def kth(k):  # smallest value v in 1..n with prefix count >= k
        pos = 0
        bit = 1 << (size.bit_length())
        while bit:
            nxt = pos + bit
            if nxt <= size and tree[nxt] < k:
                pos = nxt
                k -= tree[nxt]
            bit >>= 1
        return pos + 1

    for v in range(1, n + 1):
        add(v, 1)
    out = []
    for i in range(n):
        # code[i] later elements are smaller, so pick the (code[i]+1)-th
        # smallest unused value.
        v = kth(code[i] + 1)
        out.append(v)
        add(v, -1)
    return out


def _runs_controlled(n: int, pct: float, seed: int) -> List[int]:
    """Permutation with an exact number of step-downs.

    Boundary positions are sampled without replacement; segments between
    them receive descending blocks of values, so each segment is ascending
    internally and every boundary is a descent.
    """
    if n == 1:
        if pct > 2.0:
            raise InfeasibleTarget(f"runs target {pct}% unreachable for n=1")
        return [1]
    max_runs = n - 1
    target = round(pct / 100.0 * max_runs)
    achieved_pct = target / max_runs * 100.0
    if abs(achieved_pct - pct) > 2.0:
        raise InfeasibleTarget(
            f"runs target {pct}% for n={n}: closest achievable is "
            f"{achieved_pct:.2f}% ({target} step-downs)"
        )
    rng = random.Random(seed)
    boundaries = sorted(rng.sample(range(1, n), target))
    cuts = [0] + boundaries + [n]
    out: List[int] = []
    hi = n
    for s in range(len(cuts) - 1):
        length = cuts[s + 1] - cuts[s]
        out.extend(range(hi - length + 1, hi + 1))
        hi -= length
    return out


def _maxdist_controlled(n: int, pct: float, seed: int) -> List[int]:
    """Permutation whose maximum displacement is exactly d = ceil(pct*n/100).

    One element is pinned at displacement d, the rest are shuffled under the
    constraint |value position - slot| <= d (a value is forced into a slot
    when its deadline is reached).
    """
    import math

    d = math.ceil(pct * n / 100.0)
    if d >= n:
        d = n - 1
    if d == 0:
        return list(range(1, n + 1))
    rng = random.Random(seed)
    used = [False] * (n + 1)  # by value
    out = [0] * n
    # Pin the maximum: value d+1 (sorted position d) goes to slot 0.
    out[0] = d + 1
    used[d + 1] = True
    for i in range(1, n):
        forced = i - d + 1  # value whose sorted position is i - d
        if i - d >= 0 and not used[forced]:
            out[i] = forced
            used[forced] = True
            continue
        lo = max(1, i - d + 1)
        hi = min(n, i + d + 1)
        candidates = [v for v in range(lo, hi + 1) if not used[v]]
        v = rng.choice(candidates)
        out[i] = v
        used[v] = True
    return out


# ---------------------------------------------------------------------------
# Verification


def verify(spec: GeneratorSpec, elems: List[Element]) -> Dict[str, float]:
    """Achieved disorder percentages for logging next to the targets."""
    keys = [e.key for e in elems]
    n = len(keys)
    max_inv = n * (n - 1) // 2
    return {
        "inv_pct": (dm.inv(keys) / max_inv * 100.0) if max_inv else 0.0,
        "runs_pct": (dm.runs(keys) / (n - 1) * 100.0) if n > 1 else 0.0,
        "maxdist_pct": (dm.max_disp(keys) / n * 100.0) if n else 0.0,
    }
