"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s`.  The two large criteria
(worst-case bound, adaptive wall-time speedup) dominate the runtime; the
whole module finishes in well under fifteen minutes on a laptop-class CPU.
"""

import itertools
import math
import random
import statistics
import time
from contextlib import contextmanager

import pytest

from neatsort import disorder_metrics as dm
from neatsort.baselines import build_encroaching_lists, melsort
from neatsort.bench_cli import (
    BenchConfig,
    BenchRecord,
    emit_trial_csv,
    parse_trial_csv,
    run_suite,
)
from neatsort.core_sort import (
    MergePolicy,
    SortStats,
    compute_merging_points,
    detect_runs,
    neat_sort,
    unwrap,
    wrap,
)
from neatsort.generators import Family, GeneratorSpec, generate


@contextmanager
def criterion(number, label):
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {number:02d} FAIL — {label}")
        raise
    print(f"ACCEPTANCE {number:02d} PASS — {label}")


def reference_stable(xs):
    return sorted(((k, i) for i, k in enumerate(xs)))


def test_c01_correctness_and_stability():
    with criterion(1, "stable-sort equivalence on 10^4 random tagged arrays"):
        rng = random.Random(0xC0FFEE)
        t0 = time.perf_counter()
        for t in range(10_000):
            n = rng.randint(0, 512)
            if t % 3 == 0:
                xs = [rng.randint(0, max(1, n // 8)) for _ in range(n)]
            else:
                xs = [rng.randint(0, 10**6) for _ in range(n)]
            buf = wrap(xs)
            neat_sort(buf)
            assert [(e.key, e.tag) for e in buf] == reference_stable(xs)
        assert time.perf_counter() - t0 < 30.0


def test_c02_optimal_extremes():
    with criterion(2, "sorted/reversed extremes: single run, linear comparisons"):
        for n in (2, 3, 10, 100, 1000, 4096):
            buf = wrap(list(range(n)))
            stats = neat_sort(buf)
            assert stats.runs_detected == 1
            assert stats.comparisons == n - 1
            assert stats.merge_passes == 0
            buf = wrap(list(range(n, 0, -1)))
            stats = neat_sort(buf)
            assert stats.runs_detected == 1
            assert stats.comparisons <= n
            assert unwrap(buf) == list(range(1, n + 1))


def test_c03_half_asc_half_desc():
    with criterion(3, "half-ascending/half-descending: 2 runs, exact swap count"):
        for n in (9, 10, 1001):
            elems = generate(GeneratorSpec(Family.HALF_ASC_HALF_DESC, n))
            stats = SortStats()
            part = detect_runs(elems, stats)
            assert len(part) == 2
            assert stats.moves == 3 * ((math.ceil(n / 2)) // 2)


def test_c04_run_count_cap():
    with criterion(4, "run count <= ceil(n/2) on 10^4 random inputs"):
        rng = random.Random(17)
        for _ in range(10_000):
            n = rng.randint(2, 256)
            xs = [rng.randint(0, 10**6) for _ in range(n)]
            part = detect_runs(wrap(xs), SortStats())
            assert len(part) <= math.ceil(n / 2)


def test_c05_s1_metric_values():
    with criterion(5, "metric values on the running example sequence"):
        s1 = [1, 8, 4, 3, 7, 6, 2, 5, 10]
        assert dm.max_disp(s1) == 6
        assert dm.exc(s1) == 4
        assert dm.rem(s1) == 5
        assert dm.runs(s1) == 4
        assert dm.sus(s1) == 4
        assert dm.sms(s1) == (3, True)
        assert dm.inv(s1) == 14
        assert dm.enc(s1) == 3
        assert dm.dis(s1) == 6


def test_c06_worst_case_comparison_bound():
    with criterion(6, "comparisons <= 1.1 n log2 n + 2n on random permutations"):
        t0 = time.perf_counter()
        for exp in (8, 10, 12, 14, 16):
            n = 2**exp
            bound = 1.1 * n * math.log2(n) + 2 * n
            for seed in range(20):
                elems = generate(GeneratorSpec(Family.RANDOM_PERM, n, seed=seed))
                stats = neat_sort(elems)
                assert stats.comparisons <= bound, (n, seed, stats.comparisons)
        assert time.perf_counter() - t0 < 60.0


def test_c07_runs_adaptivity():
    with criterion(7, "comparisons <= 3n(1 + log2(Runs+1)) on runs-controlled input"):
        n = 2**16
        for pct in (1.0, 5.0, 10.0):
            elems = generate(GeneratorSpec(Family.RUNS_PCT, n, pct, seed=5))
            runs_val = dm.runs([e.key for e in elems])
            stats = neat_sort(elems)
            bound = 3 * n * (1 + math.log2(runs_val + 1))
            assert stats.comparisons <= bound, (pct, stats.comparisons, bound)


def test_c08_oracle_equivalence():
    with criterion(8, "fast metrics match brute-force oracles"):
        rng = random.Random(23)
        for _ in range(1000):
            n = rng.randint(0, 256)
            xs = [rng.randint(0, 10**4) for _ in range(n)]
            assert dm.inv(xs) == dm.inv_oracle(xs)
        for n in range(1, 8):
            for perm in itertools.permutations(range(n)):
                assert dm.sus(perm) == dm.sus_oracle(perm)
        # Independent sms brute force: direct assignment enumeration.
        def sms_enumerate(xs):
            n = len(xs)
            if n == 0:
                return 0
            for k in range(1, n + 1):
                for assign in itertools.product(range(k), repeat=n):
                    if set(assign) != set(range(k)):
                        continue
                    ok = True
                    for c in range(k):
                        sub = [xs[i] for i in range(n) if assign[i] == c]
                        asc = all(a < b for a, b in zip(sub, sub[1:]))
                        desc = all(a > b for a, b in zip(sub, sub[1:]))
                        if not (asc or desc):
                            ok = False
                            break
                    if ok:
                        return k
            return n
        for n in range(1, 6):
            for perm in itertools.permutations(range(n)):
                assert dm.sms(perm) == (sms_enumerate(list(perm)), True)
        for n in (6, 7):
            for _ in range(40):
                perm = rng.sample(range(n), n)
                assert dm.sms(perm) == (sms_enumerate(perm), True)


def test_c09_merging_point_equations():
    with criterion(9, "interleaving inequalities on 10^4 run pairs"):
        rng = random.Random(31)
        checked = 0
        while checked < 10_000:
            left = sorted(rng.randint(0, 60) for _ in range(rng.randint(1, 30)))
            right = sorted(rng.randint(0, 60) for _ in range(rng.randint(1, 30)))
            if not right[0] < left[-1]:  # Property (B) precondition
                continue
            lw = wrap(left)
            rw = wrap(right)
            mp = compute_merging_points(lw, rw)
            js, ks = mp.j_seq, mp.k_seq
            nl, nr = len(left), len(right)
            assert js[-1] == nl and ks[-1] == nr
            t = len(js) - 1
            assert ks[0] == 0
            for i in range(t):
                j, k = js[i], ks[i]
                if j > 0:
                    assert left[j - 1] <= right[k]
                if j < nl:
                    assert right[k] < left[j]
                    k_next = ks[i + 1]
                    assert right[k_next - 1] < left[j]
                    if k_next < nr:
                        assert left[j] <= right[k_next]
            checked += 1


def test_c10_bowl_shape(tmp_path):
    with criterion(10, "comparison bowl over inversion targets at n = 10^5"):
        n = 10**5
        medians = {}
        for pct in (0.0, 50.0, 100.0):
            config = BenchConfig(
                algorithms=["neatsort"],
                sizes=[n],
                family=Family.INVERSION_PCT,
                target_pct=pct,
                seed=1,
                trials=3,
                policy=MergePolicy(),
                out_path=tmp_path / f"bowl_{int(pct)}.csv",
                annotate_metrics=False,
            )
            records, _ = run_suite(config)
            medians[pct] = statistics.median(r.comparisons for r in records)
        assert medians[0.0] <= 0.5 * medians[50.0]
        assert medians[100.0] <= 0.5 * medians[50.0]


@pytest.mark.slow
def test_c11_adaptive_wall_time_speedup(tmp_path):
    with criterion(11, "sorted median wall time <= 0.2x random at n = 10^6"):
        n = 10**6
        medians = {}
        for family in (Family.SORTED, Family.RANDOM_PERM):
            config = BenchConfig(
                algorithms=["neatsort"],
                sizes=[n],
                family=family,
                target_pct=None,
                seed=3,
                trials=31,
                policy=MergePolicy(),
                out_path=tmp_path / f"speedup_{family.value}.csv",
                annotate_metrics=False,
            )
            records, _ = run_suite(config)
            medians[family] = statistics.median(r.elapsed_ns for r in records)
        assert medians[Family.SORTED] <= 0.2 * medians[Family.RANDOM_PERM]


def test_c12_melsort_conformance():
    with criterion(12, "enc equals melsort list count; melsort sorts correctly"):
        rng = random.Random(47)
        for _ in range(1000):
            n = rng.randint(1, 200)
            xs = rng.sample(range(10 * n), n)
            count = len(build_encroaching_lists(wrap(xs), SortStats()))
            assert dm.enc(xs) == count
            buf = wrap(xs)
            stats = melsort(buf)
            assert stats.runs_detected == count
            assert unwrap(buf) == sorted(xs)


def test_c13_csv_round_trip_and_median(tmp_path):
    with criterion(13, "CSV parse/emit identity and outlier-proof median"):
        rng = random.Random(53)
        records = [
            BenchRecord(
                algo=rng.choice(["neatsort", "melsort"]),
                n=rng.randint(1, 10**6),
                family="random",
                target_pct=round(rng.uniform(0, 100), 4),
                seed=rng.randint(0, 2**31),
                trial=i,
                comparisons=rng.randint(0, 10**9),
                moves=rng.randint(0, 10**9),
                elapsed_ns=rng.randint(1, 10**12),
                inv_pct=round(rng.uniform(0, 100), 4),
                runs_pct=round(rng.uniform(0, 100), 4),
                maxdist_pct=round(rng.uniform(0, 100), 4),
            )
            for i in range(1000)
        ]
        path = tmp_path / "synth.csv"
        emit_trial_csv(records, path)
        assert parse_trial_csv(path) == records
        # A trial blowing up 100x must not move the median cell; the mean must.
        clean = [990, 995, 1000, 1005, 1010]
        spiked = clean[:-1] + [clean[-1] * 100]
        assert statistics.median(spiked) == statistics.median(clean)
        assert statistics.fmean(spiked) > statistics.fmean(clean) * 10
