import json

import pytest

from simplexmodes.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def run_json(capsys, *argv):
    rc, out = run(capsys, *argv)
    return rc, json.loads(out)


class TestCharTable:
    def test_s3(self, capsys):
        rc, doc = run_json(capsys, "chartable", "--n", "3")
        assert rc == 0
        # partitions and classes both come in reverse-lex order
        assert doc["payload"]["partitions"] == [[3], [2, 1], [1, 1, 1]]
        assert doc["payload"]["classes"] == [[3], [2, 1], [1, 1, 1]]
        assert doc["payload"]["characters"] == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
        assert all(c["passed"] for c in doc["checks"])

    def test_metadata(self, capsys):
        _, doc = run_json(capsys, "chartable", "--n", "4")
        assert doc["command"] == "chartable"
        assert doc["tolerances"]["real"] == 1e-9


class TestBranch:
    def test_columns(self, capsys):
        _, doc = run_json(capsys, "branch", "--n", "3")
        assert doc["payload"]["trivial_multiplicity"] == [1, 0, 1]
        _, doc = run_json(capsys, "branch", "--n", "4")
        assert doc["payload"]["trivial_multiplicity"] == [1, 0, 1, 1, 0]
        _, doc = run_json(capsys, "branch", "--n", "5")
        assert doc["payload"]["trivial_multiplicity"] == [1, 1, 0, 0, 1, 1, 2]


class TestReduce:
    def test_o4_table(self, capsys):
        rc, doc = run_json(capsys, "reduce", "--chain", "o4s5c5", "--max", "10")
        assert rc == 0
        payload = doc["payload"]
        assert payload["periodic"] == [1, 0, 1, 4, 5, 8, 9, 12, 17, 20, 25]
        assert payload["totals"] == [12, 1, 0, 0, 26, 15, 48]
        assert payload["grand_total"] == 102
        assert payload["entries"][3] == [1, 0, 1, 0, 1, 0, 1]

    def test_o3_table(self, capsys):
        _, doc = run_json(capsys, "reduce", "--chain", "o3s4c4", "--max", "4")
        assert doc["payload"]["periodic"] == [1, 0, 1, 2, 3]

    def test_o2_table(self, capsys):
        _, doc = run_json(capsys, "reduce", "--chain", "o2s3c3", "--max", "3")
        assert doc["payload"]["periodic"] == [1, 0, 0, 0, 0, 1, 1]

    def test_csv_format(self, capsys):
        rc, out = run(capsys, "reduce", "--chain", "o4s5c5", "--max", "3",
                      "--format", "csv")
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("label,[5],")
        assert lines[0].endswith("periodic")
        assert lines[-1].startswith("totals,")

    def test_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv("MODES_NUM_THREADS", "3")
        rc, doc = run_json(capsys, "reduce", "--chain", "o4s5c5", "--max", "8")
        assert rc == 0
        assert doc["payload"]["periodic"] == [1, 0, 1, 4, 5, 8, 9, 12, 17]

    def test_bad_threads_env(self, capsys, monkeypatch):
        monkeypatch.setenv("MODES_NUM_THREADS", "zero")
        rc, _ = run(capsys, "reduce", "--chain", "o4s5c5", "--max", "2")
        assert rc == 2


class TestModes:
    def test_constant_mode(self, capsys):
        rc, doc = run_json(capsys, "modes", "--two-j", "0")
        assert rc == 0
        assert doc["payload"]["count"] == 1
        deviation = next(
            c for c in doc["checks"] if c["name"] == "invariance_max_deviation"
        )
        assert deviation["passed"] and deviation["residual"] < 1e-12

    def test_degree_two(self, capsys):
        rc, doc = run_json(
            capsys, "modes", "--two-j", "2", "--verify-points", "25", "--seed", "7"
        )
        assert rc == 0
        assert doc["payload"]["count"] == 1
        assert doc["seed"] == 7
        assert all(c["passed"] for c in doc["checks"])

    def test_range_guard(self, capsys):
        rc, _ = run(capsys, "modes", "--two-j", "13")
        assert rc == 2


class TestClassChars:
    def test_values(self, capsys):
        rc, doc = run_json(capsys, "classchars", "--two-j-max", "5")
        assert rc == 0
        rows = {tuple(r["class"]): r["values"] for r in doc["payload"]["rows"]}
        assert rows[(5,)] == [1, -1, -1, 1, 0, 1]
        assert rows[(3, 1, 1)] == [1, 1, 0, 1, 1, 0]
        assert all(c["passed"] for c in doc["checks"])


class TestVerify:
    def test_clean_build_passes(self, capsys):
        rc, doc = run_json(capsys, "verify", "--all")
        assert rc == 0
        assert doc["payload"]["checks_failed"] == 0
        names = {c["name"] for c in doc["checks"]}
        assert "erratum_s4_[211]" in names
        assert "erratum_o4_s5" in names

    @pytest.mark.parametrize(
        "fault",
        ["chartable:5:2:3", "chartable:3:0:0", "o4:10:5", "o4:0:0", "classchars:6:0"],
    )
    def test_fault_injection_trips(self, capsys, fault):
        rc, _ = run(capsys, "verify", "--all", "--inject-fault", fault)
        err = capsys.readouterr()
        assert rc == 3

    def test_bad_fault_spec(self, capsys):
        rc, _ = run(capsys, "verify", "--all", "--inject-fault", "nonsense")
        assert rc == 2


class TestInterface:
    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["chartable", "--n", "3", "--frobnicate"])
        assert exc.value.code == 2

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["tabulate"])
        assert exc.value.code == 2

    def test_csv_rejected_elsewhere(self, capsys):
        rc, _ = run(capsys, "chartable", "--n", "3", "--format", "csv")
        assert rc == 2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "table.json"
        rc = main(["chartable", "--n", "3", "--output", str(target)])
        assert rc == 0
        doc = json.loads(target.read_text())
        assert doc["payload"]["n"] == 3

    def test_deterministic_output(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for target in (a, b):
            rc = main([
                "modes", "--two-j", "3", "--verify-points", "10",
                "--seed", "5", "--output", str(target),
            ])
            assert rc == 0
        assert a.read_bytes() == b.read_bytes()
