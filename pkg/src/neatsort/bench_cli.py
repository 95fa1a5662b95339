"""Benchmark harness: interleaved trials, median/mean timing, CSV output.

Subcommands:
  bench    run a suite and write trial + summary CSV files
  sort     sort a newline-separated integer file with a chosen algorithm
  metrics  print the disorder measures of an input file as key=value lines

Exit codes: 0 success, 2 configuration error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import baselines, disorder_metrics
from .core_sort import Element, MergeMode, MergePolicy, SortStats, neat_sort
from .generators import Family, GeneratorSpec, generate, verify

ALGORITHMS: Dict[str, Callable[[List[Element], int], SortStats]] = {
    "neatsort": lambda buf, seed, policy=None: neat_sort(
        buf, policy or MergePolicy()
    ),
    "mergesort": lambda buf, seed, policy=None: baselines.merge_sort(buf),
    "quicksort": lambda buf, seed, policy=None: baselines.quicksort_random(buf, seed),
    "introsort": lambda buf, seed, policy=None: baselines.introsort_hybrid(buf),
    "melsort": lambda buf, seed, policy=None: baselines.melsort(buf),
}

TRIAL_FIELDS = [
    "algo", "n", "family", "target_pct", "seed", "trial",
    "comparisons", "moves", "elapsed_ns", "inv_pct", "runs_pct", "maxdist_pct",
]
SUMMARY_FIELDS = [
    "algo", "n", "family", "target_pct",
    "median_ms", "mean_ms", "median_comparisons", "rel_perf_pct",
]


class VerificationError(RuntimeError):
    pass


@dataclass
class BenchConfig:
    algorithms: List[str]
    sizes: List[int]
    family: Family
    target_pct: Optional[float]
    seed: int
    trials: Optional[int]  # None -> size-dependent default
    policy: MergePolicy
    out_path: Path
    baseline: str = "introsort"
    annotate_metrics: bool = True  # disorder stats per input; off for pure timing

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("sizes must be nonempty")
        if self.trials is not None and self.trials < 1:
            raise ValueError("trials must be >= 1")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")


@dataclass
class BenchRecord:
    algo: str
    n: int
    family: str
    target_pct: float
    seed: int
    trial: int
    comparisons: int
    moves: int
    elapsed_ns: int
    inv_pct: float
    runs_pct: float
    maxdist_pct: float


@dataclass
class SummaryRecord:
    algo: str
    n: int
    family: str
    target_pct: float
    median_ms: float
    mean_ms: float
    median_comparisons: int
    rel_perf_pct: float


def relative_performance(t_baseline: float, t_subject: float) -> float:
    """(T_base - T_subject) / max(T_base, T_subject) * 100."""
    if t_baseline <= 0 or t_subject <= 0:
        raise ValueError("durations must be positive")
    return (t_baseline - t_subject) / max(t_baseline, t_subject) * 100.0


# Paper-scale trial counts divided by 100, floored at 31, forced odd so the
# median is a single order statistic.
_TRIAL_TABLE = [
    (102_400, 10_000),
    (409_600, 50_000),
    (819_200, 25_000),
    (1_638_400, 10_000),
    (3_276_800, 5_000),
    (26_214_400, 1_000),
]


def default_trial_count(n: int) -> int:
    base = 500
    for upper, cases in _TRIAL_TABLE:
        if n <= upper:
            base = cases
            break
    t = max(31, base // 100)
    if t % 2 == 0:
        t += 1
    return t


def run_suite(config: BenchConfig) -> Tuple[List[BenchRecord], List[SummaryRecord]]:
    """Execute the interleaved protocol: per trial, one fresh input; every
    selected algorithm sorts an independent copy; timing wraps the sort call
    only."""
    records: List[BenchRecord] = []
    summaries: List[SummaryRecord] = []
    for n in config.sizes:
        trials = config.trials or default_trial_count(n)
        cell: Dict[str, List[BenchRecord]] = {a: [] for a in config.algorithms}
        for trial in range(trials):
            trial_seed = config.seed + trial
            spec = GeneratorSpec(
                family=config.family,
                n=n,
                target_pct=config.target_pct,
                seed=trial_seed,
            )
            elems = generate(spec)
            if config.annotate_metrics:
                achieved = verify(spec, elems)
            else:
                achieved = {"inv_pct": 0.0, "runs_pct": 0.0, "maxdist_pct": 0.0}
            for algo in config.algorithms:
                buf = list(elems)
                runner = ALGORITHMS[algo]
                t0 = time.perf_counter_ns()
                if algo == "neatsort":
                    stats = runner(buf, trial_seed, config.policy)
                else:
                    stats = runner(buf, trial_seed)
                elapsed = max(1, time.perf_counter_ns() - t0)
                _check_sorted(algo, buf, elems, spec)
                rec = BenchRecord(
                    algo=algo,
                    n=n,
                    family=config.family.value,
                    target_pct=config.target_pct or 0.0,
                    seed=trial_seed,
                    trial=trial,
                    comparisons=stats.comparisons,
                    moves=stats.moves,
                    elapsed_ns=elapsed,
                    inv_pct=round(achieved["inv_pct"], 4),
                    runs_pct=round(achieved["runs_pct"], 4),
                    maxdist_pct=round(achieved["maxdist_pct"], 4),
                )
                records.append(rec)
                cell[algo].append(rec)
        baseline_median = None
        if config.baseline in cell and cell[config.baseline]:
            baseline_median = statistics.median(
                r.elapsed_ns for r in cell[config.baseline]
            )
        for algo in config.algorithms:
            rows = cell[algo]
            med_ns = statistics.median(r.elapsed_ns for r in rows)
            mean_ns = statistics.fmean(r.elapsed_ns for r in rows)
            rel = (
                relative_performance(baseline_median, med_ns)
                if baseline_median
                else 0.0
            )
            summaries.append(
                SummaryRecord(
                    algo=algo,
                    n=n,
                    family=config.family.value,
                    target_pct=config.target_pct or 0.0,
                    median_ms=round(med_ns / 1e6, 3),
                    mean_ms=round(mean_ns / 1e6, 3),
                    median_comparisons=int(
                        statistics.median(r.comparisons for r in rows)
                    ),
                    rel_perf_pct=round(rel, 3),
                )
            )
    return records, summaries


def _check_sorted(algo, buf, original, spec):
    for i in range(len(buf) - 1):
        if buf[i].key > buf[i + 1].key:
            raise VerificationError(
                f"{algo} produced unsorted output at index {i} "
                f"(seed={spec.seed}, spec={spec.to_json_dict()})"
            )
    if sorted(e.key for e in buf) != sorted(e.key for e in original):
        raise VerificationError(
            f"{algo} lost elements (seed={spec.seed}, spec={spec.to_json_dict()})"
        )


# ---------------------------------------------------------------------------
# CSV round-trip


def emit_trial_csv(records: Iterable[BenchRecord], path: Path) -> None:
    _emit(records, path, TRIAL_FIELDS)


def emit_summary_csv(records: Iterable[SummaryRecord], path: Path) -> None:
    _emit(records, path, SUMMARY_FIELDS)


def _emit(records, path: Path, headers: List[str]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(headers)
        for rec in records:
            writer.writerow([getattr(rec, h) for h in headers])


def parse_trial_csv(path: Path) -> List[BenchRecord]:
    return _parse(path, BenchRecord, TRIAL_FIELDS)


def parse_summary_csv(path: Path) -> List[SummaryRecord]:
    return _parse(path, SummaryRecord, SUMMARY_FIELDS)


def _parse(path: Path, cls, headers):
    types = {f.name: f.type for f in fields(cls)}
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = set(headers) - set(reader.fieldnames or [])
        if missing:
            raise ValueError(f"missing CSV columns: {sorted(missing)}")
        for row in reader:
            kwargs = {}
            for h in headers:
                t = types[h]
                raw = row[h]
                if t in ("int", int):
                    kwargs[h] = int(raw)
                elif t in ("float", float):
                    kwargs[h] = float(raw)
                else:
                    kwargs[h] = raw
            out.append(cls(**kwargs))
    return out


# ---------------------------------------------------------------------------
# CLI


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neatsort",
        description="Adaptive-sort benchmark harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser(
        "bench",
        help="run a benchmark suite",
        epilog=(
            "With --trials auto the trial count depends on n: "
            "<=102400 -> 101, <=409600 -> 501, <=819200 -> 251, "
            "<=1638400 -> 101, <=3276800 -> 51, otherwise 31 "
            "(always odd, minimum 31)."
        ),
    )
    b.add_argument("--algos", default="neatsort,introsort",
                   help="comma-separated subset of " + ",".join(ALGORITHMS))
    b.add_argument("--family", default="random",
                   choices=[f.value for f in Family])
    b.add_argument("--pct", type=float, default=None,
                   help="disorder target percentage for *-pct families")
    b.add_argument("--sizes", required=True,
                   help="comma-separated list of array sizes")
    b.add_argument("--trials", default="auto",
                   help="'auto' or a positive integer")
    b.add_argument("--seed", type=int, default=42)
    b.add_argument("--p", type=float, default=1.3,
                   help="triple-p scheduling parameter in [1.0, 2.0]")
    b.add_argument("--policy", default="triple-p",
                   choices=[m.value for m in MergeMode])
    b.add_argument("--baseline", default="introsort",
                   help="algorithm used as relative-performance baseline")
    b.add_argument("--out", required=True, help="trial CSV output path")

    s = sub.add_parser("sort", help="sort a newline-separated integer file")
    s.add_argument("--algo", default="neatsort", choices=sorted(ALGORITHMS))
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--out", dest="outfile", required=True)
    s.add_argument("--seed", type=int, default=0)

    m = sub.add_parser("metrics", help="print disorder measures of a file")
    m.add_argument("--in", dest="infile", required=True)
    return parser


def _cmd_bench(args) -> int:
    try:
        trials = None if args.trials == "auto" else int(args.trials)
        config = BenchConfig(
            algorithms=[a.strip() for a in args.algos.split(",") if a.strip()],
            sizes=[int(s) for s in args.sizes.split(",")],
            family=Family(args.family),
            target_pct=args.pct,
            seed=args.seed,
            trials=trials,
            policy=MergePolicy(MergeMode(args.policy), args.p),
            out_path=Path(args.out),
            baseline=args.baseline,
        )
        if config.family.needs_pct and config.target_pct is None:
            raise ValueError(f"--pct is required for family {config.family.value}")
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        records, summaries = run_suite(config)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    emit_trial_csv(records, config.out_path)
    summary_path = config.out_path.with_name(
        config.out_path.stem + "_summary" + config.out_path.suffix
    )
    emit_summary_csv(summaries, summary_path)
    print(f"wrote {len(records)} trial rows to {config.out_path}")
    print(f"wrote {len(summaries)} summary rows to {summary_path}")
    return 0


def _cmd_sort(args) -> int:
    try:
        keys = [
            int(line)
            for line in Path(args.infile).read_text().split()
        ]
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    buf = [Element(k, i) for i, k in enumerate(keys)]
    if args.algo == "neatsort":
        stats = neat_sort(buf)
    else:
        stats = ALGORITHMS[args.algo](buf, args.seed)
    Path(args.outfile).write_text("\n".join(str(e.key) for e in buf) + "\n")
    print(
        f"{args.algo}: n={len(buf)} comparisons={stats.comparisons} "
        f"moves={stats.moves}"
    )
    return 0


def _cmd_metrics(args) -> int:
    try:
        keys = [int(line) for line in Path(args.infile).read_text().split()]
    except (OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    report = disorder_metrics.metric_report(keys)
    for line in report.as_lines():
        print(line)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "bench":
        return _cmd_bench(args)
    if args.command == "sort":
        return _cmd_sort(args)
    return _cmd_metrics(args)


if __name__ == "__main__":
    sys.exit(main())
