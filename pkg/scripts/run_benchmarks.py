#!/usr/bin/env python3
"""Run the benchmark grid and write trial/summary CSVs under results/.

A deliberately small driver around the `neatsort bench` machinery: one
suite per input family, all five algorithms, a ladder of sizes, and a
sweep of disorder targets for the controlled families.

Usage:
    python3 scripts/run_benchmarks.py [--quick] [--outdir results]

--quick shrinks sizes and trial counts so the whole grid finishes in a
couple of minutes; the default grid is sized for an unattended run.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from neatsort.bench_cli import (  # noqa: E402
    BenchConfig,
    emit_summary_csv,
    emit_trial_csv,
    run_suite,
)
from neatsort.core_sort import MergePolicy  # noqa: E402
from neatsort.generators import Family  # noqa: E402

ALGOS = ["neatsort", "mergesort", "quicksort", "introsort", "melsort"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--outdir", default="results")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    if args.quick:
        sizes = [2**10, 2**12, 2**14]
        trials = 5
        targets = [0.0, 25.0, 50.0, 75.0, 100.0]
    else:
        sizes = [2**12, 2**14, 2**16, 2**18]
        trials = 15
        targets = [0.0, 10.0, 25.0, 50.0, 75.0, 90.0, 100.0]

    plain = [Family.SORTED, Family.REVERSED, Family.RANDOM_PERM,
             Family.HALF_ASC_HALF_DESC]
    controlled = [Family.INVERSION_PCT, Family.RUNS_PCT, Family.MAXDIST_PCT]

    jobs = [(fam, None) for fam in plain]
    jobs += [(fam, pct) for fam in controlled for pct in targets]

    for family, pct in jobs:
        tag = family.value if pct is None else f"{family.value}_{int(pct)}"
        out = outdir / f"{tag}.csv"
        config = BenchConfig(
            algorithms=ALGOS,
            sizes=sizes,
            family=family,
            target_pct=pct,
            seed=args.seed,
            trials=trials,
            policy=MergePolicy(),
            out_path=out,
        )
        records, summaries = run_suite(config)
        emit_trial_csv(records, out)
        emit_summary_csv(summaries, out.with_name(f"{tag}_summary.csv"))
        print(f"done: {tag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
