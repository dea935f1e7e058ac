import csv
import json
import math
import xml.etree.ElementTree as ET

import pytest

from horotorus.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as e:
        main(list(argv))
    capsys.readouterr()
    return e.value.code


class TestVerify:
    def test_wolpert_10k(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--suite", "wolpert", "--samples", "10000", "--seed", "42")
        assert code == 0
        (report,) = json.loads(out)
        assert report["pass"] and report["max_abs_err"] <= 1e-10
        assert report["samples"] == 10000 and report["seed"] == 42

    def test_all_smoke_deterministic(self, capsys):
        first = run_cli(capsys, "verify", "--suite", "all", "--samples", "1")
        second = run_cli(capsys, "verify", "--suite", "all", "--samples", "1")
        assert first[0] == 0
        assert first[1] == second[1]

    def test_unknown_suite(self, capsys):
        assert usage_error(capsys, "verify", "--suite", "nosuch") == 2

    def test_bad_samples(self, capsys):
        assert usage_error(capsys, "verify", "--samples", "0") == 2

    def test_failure_exit_code(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "gardiner", "--samples", "5", "--tol-fd", "1e-15")
        assert code == 1
        assert json.loads(out)[0]["pass"] is False

    def test_norms_prints_both_constants(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "norms", "--samples", "10")
        assert code == 0
        assert "stated 0.5" in err and "measured 2" in err

    def test_report_file(self, capsys, tmp_path):
        path = tmp_path / "r.json"
        code, out, _ = run_cli(capsys, "verify", "--suite", "disc", "--samples", "5", "--report", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())[0]["suite"] == "disc"

    def test_unwritable_report(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "verify", "--suite", "disc", "--samples", "2",
                               "--report", str(tmp_path / "missing" / "r.json"))
        assert code == 1 and "error" in err


class TestFlow:
    def read(self, path):
        with open(path, newline="") as fh:
            return list(csv.DictReader(fh))

    def test_horocycle_at_zero(self, capsys, tmp_path):
        out = tmp_path / "o.csv"
        code, _, _ = run_cli(capsys, "flow", "--tau", "0,1", "--foliation", "0,1", "--t-min", "0",
                             "--t-max", "6", "--steps", "500", "--out-csv", str(out))
        assert code == 0
        rows = self.read(out)
        assert len(rows) == 500
        for row in rows:
            u, v = float(row["u"]), float(row["v"])
            assert abs(v / (u * u + v * v) - 1.0) <= 1e-9

    def test_alpha_rows(self, capsys, tmp_path):
        out = tmp_path / "o.csv"
        run_cli(capsys, "flow", "--tau", "0,1", "--foliation", "1,0", "--t-min", "0",
                "--t-max", "2", "--steps", "3", "--out-csv", str(out))
        lines = out.read_text().splitlines()
        assert lines[0] == "t,u,v,ell"
        values = [[float(x) for x in line.split(",")] for line in lines[1:]]
        assert values == [pytest.approx(r, abs=1e-15) for r in ([0, 0, 1, 1], [1, -1, 1, 1], [2, -2, 1, 1])]

    def test_seventeen_digits_and_determinism(self, capsys, tmp_path):
        args = ["flow", "--tau=-0.3,0.7", "--foliation", "2,3", "--t-min", "-1", "--t-max", "1",
                "--steps", "7"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(capsys, *args, "--out-csv", str(a))
        run_cli(capsys, *args, "--out-csv", str(b))
        assert a.read_bytes() == b.read_bytes()
        for row in self.read(a):
            # 17 significant digits round-trip floats exactly
            assert all(repr(float(x)) == repr(float(format(float(x), ".17g"))) for x in row.values())

    def test_svg(self, capsys, tmp_path):
        out, svg = tmp_path / "o.csv", tmp_path / "o.svg"
        code, _, _ = run_cli(capsys, "flow", "--tau", "0,1", "--foliation", "0,1", "--t-min", "-3",
                             "--t-max", "3", "--steps", "50", "--out-csv", str(out), "--out-svg", str(svg))
        assert code == 0
        root = ET.parse(svg).getroot()
        assert (root.get("width"), root.get("height")) == ("800", "600")
        line = root.find("{http://www.w3.org/2000/svg}polyline")
        assert line.get("stroke-width") == "1"
        assert len(line.get("points").split()) == 50

    @pytest.mark.parametrize("extra", [
        ["--steps", "1"],
        ["--steps", "5", "--tau", "0,x"],
        ["--steps", "5", "--tau", "0,-1"],
        ["--steps", "5", "--foliation", "0,0"],
    ])
    def test_usage_errors(self, capsys, tmp_path, extra):
        base = {"--tau": "0,1", "--foliation": "1,0", "--t-min": "0", "--t-max": "1",
                "--out-csv": str(tmp_path / "o.csv")}
        for k, v in zip(extra[::2], extra[1::2]):
            base[k] = v
        argv = ["flow"] + [x for kv in base.items() for x in kv]
        assert usage_error(capsys, *argv) == 2

    def test_reversed_range(self, capsys, tmp_path):
        assert usage_error(capsys, "flow", "--tau", "0,1", "--foliation", "1,0", "--t-min", "1",
                           "--t-max", "0", "--steps", "3", "--out-csv", str(tmp_path / "o.csv")) == 2

    def test_unwritable(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "flow", "--tau", "0,1", "--foliation", "1,0", "--t-min", "0",
                             "--t-max", "1", "--steps", "3", "--out-csv", str(tmp_path / "no" / "o.csv"))
        assert code == 1


class TestPointQueries:
    def table(self, out):
        return {k: float(v) for k, v in (line.split() for line in out.strip().splitlines())}

    def test_norms(self, capsys):
        code, out, _ = run_cli(capsys, "norms", "--tau", "0,1", "--vec", "1,0")
        t = self.table(out)
        assert code == 0
        assert t["horocyclic"] == 1 and t["teichmuller"] == 0.5 and t["ratio"] == 2
        assert t["thurston"] == pytest.approx(0.5, abs=1e-9)

    def test_norms_zero(self, capsys):
        t = self.table(run_cli(capsys, "norms", "--tau", "0,1", "--vec", "0,0")[1])
        assert all(t[k] == 0 for k in ("teichmuller", "horocyclic", "thurston", "weil_petersson"))
        assert math.isnan(t["ratio"])

    def test_norms_scaled(self, capsys):
        assert self.table(run_cli(capsys, "norms", "--tau", "0,2", "--vec", "1,0")[1])["teichmuller"] == 0.25

    def test_dist(self, capsys):
        assert run_cli(capsys, "dist", "--from", "0,1", "--to", "0,2")[1].strip() == "0.346573590280"

    def test_fn(self, capsys):
        assert run_cli(capsys, "fn", "--tau", "0,1")[1].split("\n")[:2] == ["ell 1", "theta 0"]

    def test_legendre(self, capsys):
        out = run_cli(capsys, "legendre", "--tau", "0,1", "--zeta", "0.5,0")[1].splitlines()
        numeric = complex(*map(float, out[0].split()[1].split(",")))
        closed = complex(*map(float, out[1].split()[1].split(",")))
        assert numeric == pytest.approx(-1j, abs=1e-6)
        assert closed == pytest.approx(-1j, abs=1e-15)
        assert float(out[2].split()[1]) <= 1e-6

    @pytest.mark.parametrize("argv", [["dist", "--from", "0,1"], ["fn", "--tau", "1"], ["norms", "--tau", "0,1"],
                                      ["legendre", "--tau", "0,1", "--zeta", "a,b"], []])
    def test_usage(self, capsys, argv):
        assert usage_error(capsys, *argv) == 2
