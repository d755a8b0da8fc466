import io
import json

import pytest

from bench.records import parse_csv
from core.dlogctl import _int_list, build_parser, dispatch


def run(config_path, *argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = dispatch(["--config", config_path, "-q", *argv], stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_int_list_forms():
    assert _int_list("20,24") == [20, 24]
    assert _int_list("20-24") == [20, 21, 22, 23, 24]
    assert _int_list("20-28:4") == [20, 24, 28]


def test_solve_small_instance(config_path):
    code, out, _ = run(config_path, "solve", "--p", "11", "--g", "2", "--b", "9",
                       "--algorithm", "bsgs", "--seed", "1")
    assert code == 0
    assert out == "6\n"


def test_solve_generality_instance_with_double_index(config_path):
    code, out, _ = run(config_path, "solve", "--p", "1040483", "--g", "340003", "--b", "50064",
                       "--algorithm", "dic", "--bound", "15", "--seed", "7")
    assert code == 0
    assert out.strip() == "6"


def test_solve_json(config_path):
    code, out, _ = run(config_path, "solve", "--p", "227", "--g", "17", "--b", "103",
                       "--algorithm", "ph", "--seed", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["x"] == 10
    assert data["success"] is True
    assert set(data) == {"x", "algorithm", "success", "candidates_tested", "smooth_found",
                         "rounds", "elapsed_ms", "matched_prime"}


def test_solve_without_seed_reports_it(config_path):
    code, out, err = run(config_path, "solve", "--p", "11", "--g", "2", "--b", "9", "--algorithm", "bsgs")
    assert code == 0
    assert out == "6\n"
    assert "seed: " in err


def test_same_seed_same_output(config_path):
    argv = ["solve", "--p", "1040483", "--g", "340003", "--b", "50064", "--algorithm", "dic",
            "--bound", "15", "--seed", "11", "--json"]
    first = json.loads(run(config_path, *argv)[1])
    second = json.loads(run(config_path, *argv)[1])
    first.pop("elapsed_ms")
    second.pop("elapsed_ms")
    assert first == second


def test_solve_non_prime_is_usage_error(config_path):
    code, out, err = run(config_path, "solve", "--p", "12", "--g", "5", "--b", "7", "--algorithm", "bsgs")
    assert code == 2
    assert out == ""
    assert "dlogctl solve" in err


def test_solve_no_solution_exits_one(config_path):
    code, _, err = run(config_path, "solve", "--p", "7", "--g", "2", "--b", "3", "--algorithm", "bsgs",
                       "--seed", "1")
    assert code == 1
    assert "NoSolution" in err


def test_analyze_probability(config_path):
    code, out, _ = run(config_path, "analyze", "--prob", "1,1")
    assert code == 0
    assert out.strip() == "0.5"
    code, out, _ = run(config_path, "analyze", "--prob", "5,5")
    assert float(out) == pytest.approx(0.9375 + 2 ** -25)


def test_analyze_nice_cases(config_path):
    code, out, _ = run(config_path, "analyze", "--nice-cases", "3")
    assert code == 0
    assert out.strip() == "30"
    assert run(config_path, "analyze", "--nice-cases", "0")[0] == 2


def test_analyze_log_counts(config_path):
    code, out, _ = run(config_path, "analyze", "--log-counts", "10,3,5")
    assert code == 0
    assert out.splitlines() == ["ic: 11", "dic_sequential: 8", "dic_parallel: 5"]


def test_analyze_empirical(config_path):
    code, out, _ = run(config_path, "analyze", "--empirical", "2,2", "--bits", "16",
                       "--trials", "3", "--seed", "4")
    assert code == 0
    assert out.startswith("u=2 v=2: empirical ")


def test_usage_errors(config_path):
    assert dispatch(["--config", config_path, "frobnicate"]) == 2
    assert dispatch(["--config", config_path], stderr=io.StringIO()) == 2
    assert dispatch(["--config", config_path, "analyze"]) == 2
    assert dispatch(["--config", config_path, "analyze", "--prob", "1"]) == 2


def test_help_exits_zero():
    assert dispatch(["--help"]) == 0
    assert "sweep" in build_parser().format_help()


def test_invalid_config_exits_two(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("solver:\n  executor: gpu\n")
    code, _, err = run(str(path), "selftest")
    assert code == 2
    assert "solver.executor must be one of" in err


def test_sweep_writes_csv_and_svg(config_path, tmp_path):
    out, svg = tmp_path / "sweep.csv", tmp_path / "sweep.svg"
    code, stdout, _ = run(config_path, "sweep", "--bits", "14,16", "--algorithms", "bsgs,ph",
                          "--trials", "2", "--seed", "5", "--out", str(out), "--svg", str(svg))
    assert code == 0
    assert "0 failed trials" in stdout
    records = parse_csv(out.read_bytes())
    assert len(records) == 8
    assert all(r.success for r in records)
    assert svg.read_bytes().lstrip().startswith(b"<svg")


def test_sweep_rejects_bad_arguments(config_path, tmp_path):
    out = str(tmp_path / "x.csv")
    assert run(config_path, "sweep", "--bits", "8", "--out", out)[0] == 2
    assert run(config_path, "sweep", "--bits", "16", "--algorithms", "nfs", "--out", out)[0] == 2
    assert run(config_path, "sweep", "--bits", "16", "--formula", "ic=cube-root", "--out", out)[0] == 2


def test_plot_from_csv(config_path, tmp_path):
    source, target = tmp_path / "s.csv", tmp_path / "s.svg"
    assert run(config_path, "sweep", "--bits", "14", "--algorithms", "bsgs", "--trials", "2",
               "--seed", "2", "--out", str(source))[0] == 0
    code, _, _ = run(config_path, "plot", "--in", str(source), "--out", str(target),
                     "--y", "success_rate", "--title", "ok")
    assert code == 0
    assert b"polyline" in target.read_bytes()

    assert run(config_path, "plot", "--in", str(tmp_path / "missing.csv"), "--out", str(target))[0] == 2
    assert run(config_path, "plot", "--in", str(source), "--out", str(target), "--y", "median")[0] == 2


def test_experiment(config_path, tmp_path):
    out = tmp_path / "exp.csv"
    code, _, _ = run(config_path, "experiment", "comparison", "--bits", "14", "--trials", "1",
                     "--seed", "9", "--out", str(out))
    assert code == 0
    records = parse_csv(out.read_bytes())
    assert {r.algorithm for r in records} == {"dic", "dic-parallel", "ic", "bsgs", "rho", "ph"}


def test_unknown_experiment(config_path, tmp_path):
    code, _, err = run(config_path, "experiment", "nope", "--out", str(tmp_path / "x.csv"))
    assert code == 2
    assert "unknown experiment 'nope'" in err


def test_selftest(config_path):
    code, out, _ = run(config_path, "selftest")
    assert code == 0
    assert "[KNOWN]" in out
    assert "[FAIL ]" not in out
    assert "4 known discrepancies" in out


def test_sweep_beyond_factoring_ceiling_is_usage_error(config_path, tmp_path):
    out = tmp_path / "big.csv"
    code, stdout, err = run(config_path, "sweep", "--bits", "90", "--algorithms", "bsgs",
                            "--trials", "1", "--out", str(out))
    assert code == 2
    assert stdout == ""
    assert "bits must be in [12, 80]" in err
    assert not out.exists()


def test_argparse_errors_go_to_the_given_stderr(config_path):
    code, out, err = run(config_path, "frobnicate")
    assert code == 2
    assert out == ""
    assert "invalid choice" in err
    assert "usage:" in err


def test_help_goes_to_the_given_stdout():
    stdout, stderr = io.StringIO(), io.StringIO()
    assert dispatch(["sweep", "--help"], stdout=stdout, stderr=stderr) == 0
    assert "--bits" in stdout.getvalue()
    assert stderr.getvalue() == ""
