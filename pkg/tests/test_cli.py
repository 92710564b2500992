import json
from pathlib import Path

import pytest

from rentmin.cli import EXIT_CHECK, EXIT_INPUT, EXIT_OK, app
from rentmin.model import parse_instance, serialize_instance
from tests._shared_cases import CaseName, case_instance


def _write_case(tmp_path: Path, name: CaseName = "single_job") -> Path:
    path = tmp_path / f"{name}.json"
    path.write_bytes(serialize_instance(case_instance(name)))
    return path


def test_gen_writes_one_instance_file(tmp_path: Path) -> None:
    out = tmp_path / "inst.json"

    code = app(["gen", "--kind", "random", "--seed", "3", "--n", "5", "--T", "3", "--out", str(out)])

    assert code == EXIT_OK
    inst = parse_instance(out.read_bytes())
    assert inst.n == 5
    assert inst.T == 3


def test_gen_exhaustive_writes_directory_of_digests(tmp_path: Path) -> None:
    out = tmp_path / "grid"

    code = app(["gen", "--kind", "exhaustive", "--horizon", "2", "--max-jobs", "2", "--out", str(out)])

    assert code == EXIT_OK
    assert len(list(out.glob("*.json"))) == 10


def test_gen_reads_spec_block_and_flags_override(tmp_path: Path) -> None:
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"kind": "late-emergence", "T": 5, "n": 1}), encoding="utf-8")
    out = tmp_path / "inst.json"

    code = app(["gen", "--spec", str(spec), "--T", "10", "--out", str(out)])

    assert code == EXIT_OK
    assert [(job.r, job.d) for job in parse_instance(out.read_bytes()).jobs] == [(0, 100), (90, 100)]


def test_gen_bad_parameters_exit_one(capsys: pytest.CaptureFixture[str]) -> None:
    code = app(["gen", "--kind", "random", "--horizon", "2", "--max-window", "4"])

    assert code == EXIT_INPUT
    assert "GENERATOR_INVALID_PARAMETERS" in capsys.readouterr().err


def test_simulate_single_job_writes_trace(tmp_path: Path) -> None:
    trace_path = tmp_path / "trace.json"

    code = app(["simulate", "--instance", str(_write_case(tmp_path)), "--out", str(trace_path)])

    assert code == EXIT_OK
    assert json.loads(trace_path.read_text(encoding="utf-8"))["total_rents"] == 6


def test_simulate_invalid_instance_exits_one(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "bad.json"
    path.write_text('{"T":10,"lambda":0,"jobs":[{"id":1,"r":5,"d":5}]}', encoding="utf-8")

    code = app(["simulate", "--instance", str(path)])

    assert code == EXIT_INPUT
    assert "INSTANCE_EMPTY_WINDOW" in capsys.readouterr().err


def test_simulate_missing_file_exits_one(tmp_path: Path) -> None:
    assert app(["simulate", "--instance", str(tmp_path / "missing.json")]) == EXIT_INPUT


def test_opt_prints_counts(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    path = _write_case(tmp_path, "five_jobs_two_slots")

    code = app(["opt", "--instance", str(path), "--algorithm", "brute"])

    assert code == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["count"] == 3
    assert document["method"] == "exact"


def test_check_round_trip_exits_zero(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    instance = _write_case(tmp_path, "late_emergence_pair")
    trace = tmp_path / "trace.json"
    assert app(["simulate", "--instance", str(instance), "--out", str(trace)]) == EXIT_OK

    code = app(["check", "--instance", str(instance), "--trace", str(trace)])

    assert code == EXIT_OK
    assert capsys.readouterr().out.strip() == "ok"


def test_check_corrupted_trace_exits_two_with_hall_witness(
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    instance = _write_case(tmp_path)
    trace = tmp_path / "trace.json"
    app(["simulate", "--instance", str(instance), "--out", str(trace)])
    document = json.loads(trace.read_text(encoding="utf-8"))
    document["steps"][0]["rents"] = document["steps"][0]["rents"][4:]
    trace.write_text(json.dumps(document), encoding="utf-8")

    code = app(["check", "--instance", str(instance), "--trace", str(trace)])

    assert code == EXIT_CHECK
    err = capsys.readouterr().err
    assert "CHECK_HALL_VIOLATION" in err
    assert "window [0, 5)" in err


def test_sweep_exhaustive_writes_reports(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "sweep"

    code = app(
        [
            "sweep",
            "--exhaustive",
            "--horizon",
            "3",
            "--max-jobs",
            "2",
            "--T",
            "2",
            "--no-progress",
            "--out",
            str(out),
        ]
    )

    assert code == EXIT_OK
    aggregate = json.loads(capsys.readouterr().out)
    assert aggregate["violations"] == 0
    assert aggregate["rows"] == 28
    assert (out / "ratios.csv").exists()
    assert (out / "ratios.json").exists()
