"""Tests for the cosbound command line."""

import json

import numpy as np
import pytest

from cosbound import __version__
from cosbound.cli import main
from cosbound.core.records import polynomial_record
from cosbound.core.trigpoly import from_spectral_factor
from cosbound.extremal import pipeline
from cosbound.extremal.witnesses import FACTOR_V4, FACTOR_V8


def _poly_file(tmp_path, name, coeffs):
    path = tmp_path / name
    path.write_text(json.dumps(polynomial_record(coeffs)))
    return str(path)


class TestUsage:
    def test_degree_out_of_range(self, capsys):
        assert main(["compute", "--n", "9"]) == 1
        assert "usage:" in capsys.readouterr().err

    def test_missing_command(self):
        assert main([]) == 1

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_bad_config(self, tmp_path, capsys):
        path = tmp_path / "bad.cfg"
        path.write_text("grid = 1\n")
        assert main(["compute", "--n", "2", "--config", str(path)]) == 1
        assert "Error:" in capsys.readouterr().err


class TestCompute:
    def test_v2_to_stdout(self, capsys):
        assert main(["compute", "--n", "2", "--quiet"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["v"] == pytest.approx(53.1390720, abs=1e-6)
        assert record["v_rounded"] == "53.1390720"
        assert record["certified"] is True

    def test_deterministic_output(self, tmp_path):
        outputs = []
        for name in ("first.json", "second.json"):
            pipeline.clear_cache()
            out = tmp_path / name
            argv = ["compute", "--n", "4", "--grid", "51", "--strict-paper-bounds", "--quiet", "--out", str(out)]
            assert main(argv) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        record = json.loads(outputs[0])
        assert record["v"] == pytest.approx(34.8992259, abs=1e-5)
        assert "runtime" not in record

    @pytest.mark.slow
    def test_degree_six_runs_are_byte_identical(self, tmp_path):
        outputs = []
        for name in ("first.json", "second.json"):
            pipeline.clear_cache()
            out = tmp_path / name
            argv = ["compute", "--n", "6", "--seed", "42", "--grid", "201", "--quiet", "--out", str(out)]
            assert main(argv) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]
        assert json.loads(outputs[0])["v"] == pytest.approx(34.8992259, abs=1e-5)

    @pytest.mark.slow
    def test_v7_to_file(self, tmp_path):
        out = tmp_path / "v7.json"
        assert main(["compute", "--n", "7", "--grid", "501", "--seed", "7", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["v"] == pytest.approx(34.6494874, abs=1e-5)


class TestSweep:
    def test_rows(self, tmp_path):
        out = tmp_path / "out.csv"
        assert main(["sweep", "--n", "5", "--grid", "201", "--csv", str(out), "--strict-paper-bounds", "--quiet"]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "a,chi,ratio,subproblem,certified"
        assert len(lines) == 202
        ratios = [float(line.split(",")[2]) for line in lines[1:]]
        assert min(ratios) == pytest.approx(34.8992259, abs=1e-3)

    def test_two_points(self, capsys):
        assert main(["sweep", "--n", "4", "--grid", "2", "--quiet"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 3

    def test_subproblem_files(self, tmp_path):
        base = tmp_path / "v6.csv"
        argv = ["sweep", "--n", "6", "--grid", "3", "--subproblems", "--csv", str(base), "--strict-paper-bounds", "--quiet"]
        assert main(argv) == 0
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == ["v6.active-4-5.csv", "v6.active-4.csv", "v6.active-5.csv", "v6.active-none.csv"]
        header = (tmp_path / "v6.active-4.csv").read_text().splitlines()[0]
        assert header == "a,chi,ratio,subproblem,converged,feasible,multipliers_valid"

    def test_degree_range(self):
        assert main(["sweep", "--n", "3"]) == 1


class TestVerify:
    def test_v4_witness(self, tmp_path, capsys):
        coeffs = from_spectral_factor(np.array(FACTOR_V4)).coeffs
        assert main(["verify", _poly_file(tmp_path, "v4.json", coeffs)]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["membership"]["in_class"] is True
        assert record["v"] == pytest.approx(34.8992259, abs=1e-5)
        assert record["R"] == pytest.approx(17.4496130, abs=1e-5)

    def test_v8_witness(self, tmp_path, capsys):
        coeffs = from_spectral_factor(np.array(FACTOR_V8)).coeffs
        assert main(["verify", _poly_file(tmp_path, "v8.json", coeffs)]) == 0
        assert json.loads(capsys.readouterr().out)["v"] == pytest.approx(34.5399155, abs=1e-5)

    def test_tolerance_flag(self, tmp_path, capsys):
        # the typeset V_8 table rounds a_5 and a_6 to about -1e-8
        coeffs = from_spectral_factor(np.array(FACTOR_V8)).coeffs
        path = _poly_file(tmp_path, "v8.json", coeffs)
        assert main(["verify", path, "--tol", "1e-9"]) == 2
        record = json.loads(capsys.readouterr().out)
        assert record["membership"]["violated_conditions"] == ["negative-coefficient"]
        assert main(["verify", path, "--tol", "1e-7"]) == 0

    def test_not_member(self, tmp_path, capsys):
        assert main(["verify", _poly_file(tmp_path, "flat.json", [1.0, 1.0])]) == 2
        record = json.loads(capsys.readouterr().out)
        assert record["membership"]["violated_conditions"] == ["order-violation"]
        assert record["v"] is None

    def test_parse_failure(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        assert main(["verify", str(path)]) == 1
        assert main(["verify", str(tmp_path / "absent.json")]) == 1


class TestBounds:
    def test_degree_eight(self, capsys):
        assert main(["bounds", "--n", "8", "--upper", "34.6494874"]) == 0
        record = json.loads(capsys.readouterr().out)
        lo, hi = record["interval"]
        assert lo == pytest.approx(1.6566924, abs=1e-6)
        assert hi == pytest.approx(1.8191095, abs=1e-6)
        assert [line["name"] for line in record["lines"]] == ["F1", "F2", "F3"]
        assert all(f["passed"] for f in record["functionals"])

    def test_degree_four(self, capsys):
        assert main(["bounds", "--n", "4", "--upper", "36.9199911"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["interval_rounded"] == ["1.5597515", "1.7320508"]


class TestAudit:
    def test_degree_two(self, capsys):
        assert main(["audit", "--n", "2", "--samples", "20000", "--quiet"]) == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True
