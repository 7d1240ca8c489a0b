"""Command-line interface: sweeps, summaries, tables, config files, exit codes."""

import csv

import pytest

from plcmac.cli import build_parser, main
from plcmac.engine import CSV_HEADER


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_sweep_single_writes_a_csv(tmp_path):
    out = tmp_path / "rows.csv"
    rc = main(["sweep-single", "--n", "10", "--ratios", "1.0", "--trials", "2",
               "--seed", "3", "--out", str(out)])
    assert rc == 0
    rows = _read_csv(out)
    assert tuple(rows[0]) == CSV_HEADER
    assert len(rows) == 1 + 3 * 1 * 1 * 2  # all three protocols by default
    protocols = {r[0] for r in rows[1:]}
    assert protocols == {"epmac", "pmac", "ieee1901"}


def test_sweep_output_is_byte_identical_across_runs_and_jobs(tmp_path):
    args = ["sweep-single", "--n", "12", "--ratios", "0.5", "1.0", "--trials", "3", "--seed", "11"]
    paths = [tmp_path / f"{tag}.csv" for tag in ("a", "b", "c")]
    assert main(args + ["--out", str(paths[0])]) == 0
    assert main(args + ["--out", str(paths[1])]) == 0
    assert main(args + ["--jobs", "2", "--out", str(paths[2])]) == 0
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1] == blobs[2]


def test_sweep_multi_accepts_a_depth_cap(tmp_path):
    out = tmp_path / "multi.csv"
    rc = main(["sweep-multi", "--protocols", "epmac", "--n", "20", "--ratios", "1.0",
               "--trials", "2", "--seed", "1", "--max-layers", "3", "--out", str(out)])
    assert rc == 0
    rows = _read_csv(out)
    assert len(rows) == 3
    assert all(1 <= int(r[8]) <= 3 for r in rows[1:])


def test_sweep_random_ratio_mode(tmp_path):
    out = tmp_path / "rand.csv"
    rc = main(["sweep-single", "--protocols", "pmac", "--n", "10", "--ratio-random",
               "0.5", "2.0", "--trials", "5", "--seed", "2", "--out", str(out)])
    assert rc == 0
    ratios = [float(r[2]) for r in _read_csv(out)[1:]]
    assert len(ratios) == 5
    assert all(0.5 <= x <= 2.0 for x in ratios)


def test_grid_and_random_ratio_flags_conflict(tmp_path):
    with pytest.raises(SystemExit):
        main(["sweep-single", "--ratios", "1.0", "--ratio-random", "0.5", "2.0",
              "--out", str(tmp_path / "x.csv")])


def test_bad_size_range_exits_2(tmp_path):
    rc = main(["sweep-single", "--n-range", "100", "50", "10", "--out", str(tmp_path / "x.csv")])
    assert rc == 2


def test_config_file_supplies_defaults_and_flags_win(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "# tiny sweep\n"
        "protocols = epmac pmac\n"
        "n = 10\n"
        "ratios = 1.0\n"
        "trials = 4\n"
        "seed = 3\n"
    )
    out_a = tmp_path / "a.csv"
    assert main(["sweep-single", "--config", str(cfg), "--out", str(out_a)]) == 0
    assert len(_read_csv(out_a)) == 1 + 2 * 4

    out_b = tmp_path / "b.csv"
    assert main(["sweep-single", "--config", str(cfg), "--trials", "1", "--out", str(out_b)]) == 0
    assert len(_read_csv(out_b)) == 1 + 2 * 1


def test_unknown_config_key_exits_2(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("velocity = 9\n")
    assert main(["sweep-single", "--config", str(cfg), "--out", str(tmp_path / "x.csv")]) == 2


def test_malformed_config_line_exits_2(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("just words\n")
    assert main(["sweep-single", "--config", str(cfg), "--out", str(tmp_path / "x.csv")]) == 2


def test_summarize_groups_by_protocol_size_and_ratio(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    main(["sweep-single", "--protocols", "epmac", "--n", "10", "20", "--ratios", "1.0",
          "--trials", "3", "--seed", "4", "--out", str(out)])
    assert main(["summarize", str(out)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "protocol,n_node,ratio,samples,mean_us,min_us,q1_us,median_us,q3_us,max_us"
    body = [line.split(",") for line in lines[1:]]
    assert [(r[0], r[1], r[2]) for r in body] == [("epmac", "10", "1.0"), ("epmac", "20", "1.0")]
    assert all(r[3] == "3" for r in body)


def test_summarize_best_ratio_keeps_one_row_per_size(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    main(["sweep-single", "--protocols", "pmac", "--n", "10", "--ratios", "0.5", "1.0", "2.0",
          "--trials", "3", "--seed", "4", "--out", str(out)])
    assert main(["summarize", str(out), "--best-ratio"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    best = lines[1].split(",")
    assert best[0] == "pmac" and best[1] == "10"
    assert float(best[2]) in (0.5, 1.0, 2.0)


def test_summarize_pool_ratios_merges_cells(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    main(["sweep-single", "--protocols", "pmac", "--n", "10", "--ratios", "0.5", "1.0",
          "--trials", "2", "--seed", "4", "--out", str(out)])
    assert main(["summarize", str(out), "--pool-ratios"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    row = lines[1].split(",")
    assert row[2] == "all"
    assert row[3] == "4"


def test_summarize_flag_conflict_and_missing_file(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    main(["sweep-single", "--protocols", "pmac", "--n", "10", "--ratios", "1.0",
          "--trials", "1", "--seed", "4", "--out", str(out)])
    assert main(["summarize", str(out), "--best-ratio", "--pool-ratios"]) == 2
    assert main(["summarize", str(tmp_path / "nope.csv")]) == 2
    capsys.readouterr()


def test_summarize_rejects_foreign_headers(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b,c\n1,2,3\n")
    assert main(["summarize", str(bad)]) == 2


def test_complexity_table(capsys):
    assert main(["complexity"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "m,k,pmac_frames,epmac_frames,delta_exact,delta_approx"
    assert len(lines) == 1 + 9 * 6
    assert lines[1] == "2,1,6,4,1.000000,2"


def test_complexity_custom_grid(capsys):
    assert main(["complexity", "--m", "2", "--k", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[1] == "2,2,34,16,3.000000,5"


def test_timing_report(capsys):
    assert main(["timing"]) == 0
    text = capsys.readouterr().out
    assert "12555.84" in text
    assert "24512.40" in text
    assert "9102" in text and "17488" in text
    assert "10232.04" in text and "10905.60" in text
    assert "preamble_slot_us=400" in text
    assert "data_frame_slot_us=20000" in text


def test_parser_builds_and_requires_a_command():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args([])
