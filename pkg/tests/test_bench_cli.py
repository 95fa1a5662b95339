import statistics
from pathlib import Path

import pytest

from neatsort import bench_cli
from neatsort.bench_cli import (
    BenchConfig,
    BenchRecord,
    SummaryRecord,
    default_trial_count,
    emit_summary_csv,
    emit_trial_csv,
    main,
    parse_summary_csv,
    parse_trial_csv,
    relative_performance,
    run_suite,
)
from neatsort.core_sort import MergePolicy
from neatsort.generators import Family


def make_config(tmp_path, **kw):
    defaults = dict(
        algorithms=["neatsort", "mergesort"],
        sizes=[200],
        family=Family.RANDOM_PERM,
        target_pct=None,
        seed=1,
        trials=3,
        policy=MergePolicy(),
        out_path=tmp_path / "out.csv",
    )
    defaults.update(kw)
    return BenchConfig(**defaults)


# ---------------------------------------------------------------------------
# relative performance


def test_relative_performance_examples():
    assert relative_performance(10.0, 10.0) == 0.0
    assert relative_performance(20.0, 10.0) == 50.0
    assert relative_performance(10.0, 20.0) == -50.0


def test_relative_performance_antisymmetric_and_bounded():
    for a, b in [(1, 3), (5, 2), (7, 7), (0.1, 100)]:
        r = relative_performance(a, b)
        assert -100.0 <= r <= 100.0
        assert r == -relative_performance(b, a)


def test_relative_performance_rejects_nonpositive():
    with pytest.raises(ValueError):
        relative_performance(0, 1)
    with pytest.raises(ValueError):
        relative_performance(1, -2)


# ---------------------------------------------------------------------------
# trial counts


def test_default_trial_count_table():
    assert default_trial_count(100) == 101
    assert default_trial_count(3 * 10**6) == 51
    assert default_trial_count(5 * 10**7) == 31
    assert default_trial_count(300_000) == 501
    assert default_trial_count(800_000) == 251
    assert default_trial_count(1_500_000) == 101


def test_default_trial_count_always_odd_and_floored():
    for n in (1, 10, 10**3, 10**5, 10**6, 10**7, 10**8):
        t = default_trial_count(n)
        assert t >= 31
        assert t % 2 == 1


# ---------------------------------------------------------------------------
# run_suite


def test_run_suite_cardinality(tmp_path):
    config = make_config(tmp_path, sizes=[100], trials=5)
    records, summaries = run_suite(config)
    assert len(records) == 2 * 5
    assert len(summaries) == 2


def test_run_suite_sorted_family_comparisons(tmp_path):
    config = make_config(
        tmp_path, family=Family.SORTED, sizes=[500], trials=3,
        algorithms=["neatsort"],
    )
    records, summaries = run_suite(config)
    assert all(r.comparisons == 499 for r in records)
    assert summaries[0].median_comparisons == 499


def test_run_suite_deterministic_counters(tmp_path):
    config = make_config(tmp_path, trials=3)
    r1, _ = run_suite(config)
    r2, _ = run_suite(config)
    assert [x.comparisons for x in r1] == [x.comparisons for x in r2]
    assert [x.seed for x in r1] == [x.seed for x in r2]


def test_run_suite_rejects_unknown_algorithm(tmp_path):
    with pytest.raises(ValueError):
        make_config(tmp_path, algorithms=["bogosort"])


def test_verification_catches_broken_sort(tmp_path, monkeypatch):
    def broken(buf, seed, policy=None):
        buf.reverse()
        from neatsort.core_sort import SortStats

        return SortStats()

    monkeypatch.setitem(bench_cli.ALGORITHMS, "neatsort", broken)
    config = make_config(tmp_path, algorithms=["neatsort"], trials=1)
    with pytest.raises(bench_cli.VerificationError, match="neatsort"):
        run_suite(config)


# ---------------------------------------------------------------------------
# CSV round-trip and median semantics


def synth_trial_records(count):
    return [
        BenchRecord(
            algo="neatsort",
            n=100 + i,
            family="random",
            target_pct=float(i % 7),
            seed=i,
            trial=i,
            comparisons=1000 + i,
            moves=2000 + i,
            elapsed_ns=10_000 + i,
            inv_pct=round(i * 0.01, 4),
            runs_pct=round(i * 0.02, 4),
            maxdist_pct=round(i * 0.03, 4),
        )
        for i in range(count)
    ]


def test_trial_csv_round_trip(tmp_path):
    records = synth_trial_records(1000)
    path = tmp_path / "trials.csv"
    emit_trial_csv(records, path)
    assert parse_trial_csv(path) == records


def test_summary_csv_round_trip(tmp_path):
    records = [
        SummaryRecord("melsort", 64, "sorted", 0.0, 1.5, 1.75, 63, -12.5),
        SummaryRecord("neatsort", 64, "sorted", 0.0, 0.5, 0.5, 63, 50.0),
    ]
    path = tmp_path / "summary.csv"
    emit_summary_csv(records, path)
    assert parse_summary_csv(path) == records


def test_csv_emit_format(tmp_path):
    path = tmp_path / "one.csv"
    emit_trial_csv(synth_trial_records(1), path)
    text = path.read_text()
    assert text.splitlines()[0] == (
        "algo,n,family,target_pct,seed,trial,comparisons,moves,elapsed_ns,"
        "inv_pct,runs_pct,maxdist_pct"
    )
    assert "\r" not in text


def test_parse_reports_missing_columns(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("algo,n\nneatsort,5\n")
    with pytest.raises(ValueError, match="missing CSV columns"):
        parse_trial_csv(path)


def test_median_unaffected_by_outlier():
    timings = [98, 99, 100, 101, 102]
    spiked = timings[:-1] + [102 * 100]  # slowest trial blows up 100x
    assert statistics.median(spiked) == statistics.median(timings)
    assert statistics.fmean(spiked) > 10 * statistics.fmean(timings)


def test_odd_trial_median_is_exact_order_statistic():
    vals = [7, 1, 9, 3, 5]
    assert statistics.median(vals) == sorted(vals)[len(vals) // 2]


# ---------------------------------------------------------------------------
# CLI surface


def test_cli_bench_and_summary_files(tmp_path):
    out = tmp_path / "res.csv"
    rc = main([
        "bench", "--algos", "neatsort,introsort", "--family", "inversion-pct",
        "--pct", "50", "--sizes", "128,256", "--trials", "3", "--seed", "42",
        "--p", "1.3", "--out", str(out),
    ])
    assert rc == 0
    rows = parse_trial_csv(out)
    assert len(rows) == 2 * 2 * 3
    summary = parse_summary_csv(tmp_path / "res_summary.csv")
    assert len(summary) == 4
    by_algo = {(s.algo, s.n): s for s in summary}
    assert by_algo[("introsort", 128)].rel_perf_pct == 0.0


def test_cli_identical_runs_identical_counters(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        main([
            "bench", "--algos", "neatsort", "--family", "random",
            "--sizes", "64", "--trials", "3", "--seed", "7", "--out", str(out),
        ])
        rows = parse_trial_csv(out)
        outs.append([(r.comparisons, r.moves, r.inv_pct) for r in rows])
    assert outs[0] == outs[1]


def test_cli_config_error_exit_code(tmp_path):
    rc = main([
        "bench", "--algos", "neatsort", "--family", "inversion-pct",
        "--sizes", "64", "--trials", "3", "--out", str(tmp_path / "x.csv"),
    ])  # missing --pct
    assert rc == 2
    rc = main([
        "bench", "--algos", "nope", "--family", "random",
        "--sizes", "64", "--out", str(tmp_path / "x.csv"),
    ])
    assert rc == 2


def test_cli_sort_and_metrics(tmp_path, capsys):
    infile = tmp_path / "in.txt"
    infile.write_text("5\n3\n9\n1\n3\n")
    outfile = tmp_path / "out.txt"
    rc = main(["sort", "--algo", "neatsort", "--in", str(infile),
               "--out", str(outfile)])
    assert rc == 0
    assert outfile.read_text().split() == ["1", "3", "3", "5", "9"]
    rc = main(["metrics", "--in", str(infile)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "inv=6" in out
    assert "runs=2" in out


def test_cli_sort_missing_file(tmp_path):
    rc = main(["sort", "--algo", "neatsort", "--in", str(tmp_path / "nope"),
               "--out", str(tmp_path / "o")])
    assert rc == 2
