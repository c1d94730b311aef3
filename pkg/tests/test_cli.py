import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "ergodec.cli"]

FIB = {"type": "toral", "r": 2, "generators": [[[0, 1], [1, 1]]]}
IDENTITY = {"type": "toral", "r": 2, "generators": [[[1, 0], [0, 1]]]}
NONCOMMUTING = {"type": "toral", "r": 2,
                "generators": [[[1, 1], [0, 1]], [[0, 1], [1, 1]]]}
BLOCK_PAIR = {"type": "toral", "r": 4, "generators": [
    [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 1]]]}
LEDRAPPIER = {"type": "laurent", "p": 2, "d": 2, "g": [
    {"exponents": [0, 0], "coefficient": 1},
    {"exponents": [1, 0], "coefficient": 1},
    {"exponents": [0, 1], "coefficient": 1}]}


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def run(*args):
    return subprocess.run(CLI + list(args), capture_output=True, text=True)


class TestAnalyze:
    def test_fibonacci_report(self, tmp_path):
        res = run("analyze", write(tmp_path, "fib.json", FIB))
        assert res.returncode == 0
        report = json.loads(res.stdout)
        gen = report["results"]["generators"][0]
        assert gen["ergodic"]["kind"] == "ergodic"
        assert gen["mixing_of_all_orders"] is True
        assert report["results"]["group"]["ergodic"]["kind"] == "ergodic"

    def test_identity_group_witness(self, tmp_path):
        res = run("analyze", write(tmp_path, "id.json", IDENTITY))
        assert res.returncode == 0
        report = json.loads(res.stdout)
        group = report["results"]["group"]["ergodic"]
        assert group["kind"] == "not-ergodic"
        assert group["certificate"]["data"]["character"] == [1, 0]

    def test_noncommuting_exits_2(self, tmp_path):
        res = run("analyze", write(tmp_path, "nc.json", NONCOMMUTING))
        assert res.returncode == 2
        assert "non-commuting" in res.stderr

    def test_missing_file_exits_1(self):
        res = run("analyze", "/nonexistent/action.json")
        assert res.returncode == 1

    def test_malformed_json_exits_2(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        res = run("analyze", str(path))
        assert res.returncode == 2
        assert "invalid JSON" in res.stderr

    def test_laurent_analyze(self, tmp_path):
        res = run("analyze", write(tmp_path, "led.json", LEDRAPPIER))
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["results"]["group"]["kind"] == "ergodic"
        kinds = {tuple(d["direction"]): d["verdict"]["kind"]
                 for d in report["results"]["directions"]}
        assert kinds == {(1, 0): "ergodic", (0, 1): "ergodic"}

    def test_text_format(self, tmp_path):
        res = run("analyze", write(tmp_path, "fib.json", FIB), "--format", "text")
        assert res.returncode == 0
        assert "command: analyze" in res.stdout


class TestFindErgodic:
    def test_block_pair(self, tmp_path):
        res = run("find-ergodic", write(tmp_path, "bp.json", BLOCK_PAIR))
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["results"]["exponents"] == [1, 1]

    def test_ledrappier_direction(self, tmp_path):
        res = run("find-ergodic", write(tmp_path, "led.json", LEDRAPPIER))
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["results"]["direction"] == [1, 0]
        assert report["results"]["bounded"] is False

    def test_identity_exits_3(self, tmp_path):
        res = run("find-ergodic", write(tmp_path, "id.json", IDENTITY))
        assert res.returncode == 3


class TestFiltration:
    def test_block_pair_dims(self, tmp_path):
        res = run("filtration", write(tmp_path, "bp.json", BLOCK_PAIR))
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["results"]["dims"] == [4, 2, 0]

    def test_identity_residual(self, tmp_path):
        res = run("filtration", write(tmp_path, "id.json", IDENTITY))
        report = json.loads(res.stdout)
        assert report["results"]["dims"] == [2, 2]
        assert report["results"]["group_ergodic"] is False

    def test_fibonacci(self, tmp_path):
        res = run("filtration", write(tmp_path, "fib.json", FIB))
        report = json.loads(res.stdout)
        assert report["results"]["dims"] == [2, 0]

    def test_laurent_rejected(self, tmp_path):
        res = run("filtration", write(tmp_path, "led.json", LEDRAPPIER))
        assert res.returncode == 2


class TestOracleCheckAndDemo:
    def test_fibonacci_box(self, tmp_path):
        res = run("oracle-check", write(tmp_path, "fib.json", FIB),
                  "--norm-bound", "3", "--cap", "100000")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["results"]["characters_checked"] == 48
        assert report["results"]["failures"] == []

    def test_demo_box_four(self):
        res = run("demo-e2", "--box", "4")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["results"]["points_certified"] == 80
        assert report["results"]["chain_length"] == 4


class TestDeterminismAndVerification:
    @pytest.mark.parametrize("args", [
        ("analyze",), ("find-ergodic",), ("filtration",),
        ("oracle-check", "--norm-bound", "2"),
    ])
    def test_byte_identical_reruns(self, tmp_path, args):
        doc = write(tmp_path, "fib.json", FIB)
        first = run(args[0], doc, *args[1:])
        second = run(args[0], doc, *args[1:])
        assert first.returncode == 0
        assert first.stdout == second.stdout

    def test_demo_byte_identical(self):
        assert run("demo-e2", "--box", "3").stdout == run("demo-e2", "--box", "3").stdout

    @pytest.mark.parametrize("command,doc", [
        ("analyze", FIB), ("analyze", IDENTITY), ("analyze", LEDRAPPIER),
        ("find-ergodic", BLOCK_PAIR), ("find-ergodic", LEDRAPPIER),
        ("filtration", BLOCK_PAIR),
    ])
    def test_verify_report_replays_cleanly(self, tmp_path, command, doc):
        path = write(tmp_path, "action.json", doc)
        res = run(command, path, "--verify-report")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["verification"]["failures"] == []
        assert report["verification"]["checked"] >= 1
