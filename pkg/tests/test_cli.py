"""
Tests for the command-line front end.
"""

import csv
import io
import json

import pytest

from plasma_response.cli import main
from plasma_response.config import settings
from plasma_response.scales import query_from_physical

pytestmark = pytest.mark.cli


def run(*argv):
    """Run the CLI in-process and return (exit status, stdout text)."""
    stream = io.StringIO()
    status = main(list(argv), stream=stream)
    return status, stream.getvalue()


def csv_rows(text):
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    return list(csv.DictReader(lines))


class TestEval:
    def test_drude_point_as_json(self):
        status, out = run("eval", "--q", "1e-4", "--x", "1", "--y", "0.5", "--json")
        assert status == 0
        records = json.loads(out)
        assert [r["model"] for r in records] == ["mermin", "lindhard", "classical"]
        mermin = records[0]
        assert mermin["re_sigma"] == pytest.approx(0.2, abs=1e-6)
        assert mermin["im_sigma"] == pytest.approx(0.4, abs=1e-6)
        assert mermin["re_eps"] is None and mermin["xp"] is None

    def test_permittivity_identity_from_json(self):
        status, out = run("eval", "--q", "0.5", "--x", "0.7", "--y", "0.1", "--xp", "1.5",
                          "--model", "mermin", "--json")
        assert status == 0
        (record,) = json.loads(out)
        sigma = complex(record["re_sigma"], record["im_sigma"])
        eps = complex(record["re_eps"], record["im_eps"])
        rhs = 1j * 1.5 ** 2 / (0.7 * 0.1) * sigma
        assert abs((eps - 1.0) - rhs) <= 1e-12 * abs(rhs)

    def test_table_output(self):
        status, out = run("eval", "--q", "1", "--x", "0.5", "--y", "0.1")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].split()[:4] == ["model", "re_sigma", "im_sigma", "abs_sigma"]
        assert [line.split()[0] for line in lines[1:]] == ["mermin", "lindhard", "classical"]

    def test_physical_inputs(self):
        status, out = run("eval", "--physical", "--omega", "2e15", "--nu", "2e13", "--k", "5e7",
                          "--density", "8.5e22", "--json")
        assert status == 0
        query = query_from_physical(omega=2e15, nu=2e13, k=5e7, N=8.5e22)
        record = json.loads(out)[0]
        assert record["x"] == pytest.approx(query.x, rel=1e-14)
        assert record["q"] == pytest.approx(query.q, rel=1e-14)
        assert record["xp"] == pytest.approx(query.x_p, rel=1e-14)

    def test_non_positive_q(self, capsys):
        status, out = run("eval", "--q", "0", "--x", "0.5", "--y", "0.1")
        assert status == 2
        assert out == ""
        assert "q must be > 0" in capsys.readouterr().err

    def test_missing_coordinate(self, capsys):
        assert run("eval", "--x", "0.5", "--y", "0.1")[0] == 2
        assert "--q is required" in capsys.readouterr().err

    def test_physical_requires_density(self, capsys):
        assert run("eval", "--physical", "--omega", "2e15", "--nu", "2e13", "--k", "5e7")[0] == 2
        assert "--density" in capsys.readouterr().err


class TestSweep:
    args = ("sweep", "--var", "x", "--from", "0.1", "--to", "1", "--points", "6", "--q", "0.5", "--y", "0.1")

    def test_header_and_rows(self):
        status, out = run(*self.args)
        assert status == 0
        header = [line for line in out.splitlines() if not line.startswith("#")][0]
        assert header == "var,model,re_sigma,im_sigma,abs_sigma,re_eps,im_eps"
        rows = csv_rows(out)
        assert len(rows) == 18
        assert [row["model"] for row in rows[:3]] == ["mermin", "lindhard", "classical"]
        assert all(row["re_eps"] == "" and row["im_eps"] == "" for row in rows)

    def test_provenance_comments(self):
        _, out = run(*self.args)
        comments = [line for line in out.splitlines() if line.startswith("#")]
        assert "# fixed: q=0.5,y=0.1" in comments

    def test_deterministic(self):
        assert run(*self.args) == run(*self.args)

    def test_worker_count_does_not_change_output(self):
        assert run("--workers", "1", *self.args)[1] == run("--workers", "2", *self.args)[1]

    def test_worker_count_from_environment(self, monkeypatch):
        monkeypatch.setenv("PLASMA_RESPONSE_WORKERS", "3")
        assert settings.get_workers() == 3
        assert run(*self.args)[0] == 0

    def test_endpoint_matches_eval(self):
        _, swept = run("sweep", "--var", "x", "--from", "0.5", "--to", "1", "--points", "2",
                       "--q", "1", "--y", "0.1", "--model", "mermin")
        _, single = run("eval", "--q", "1", "--x", "1", "--y", "0.1", "--model", "mermin", "--json")
        last = csv_rows(swept)[-1]
        record = json.loads(single)[0]
        assert float(last["var"]) == 1.0
        assert float(last["re_sigma"]) == pytest.approx(record["re_sigma"], rel=1e-10)
        assert float(last["im_sigma"]) == pytest.approx(record["im_sigma"], rel=1e-10)

    def test_permittivity_identity_in_csv(self):
        _, out = run("sweep", "--var", "x", "--from", "0.1", "--to", "1", "--points", "10",
                     "--q", "0.5", "--y", "0.1", "--xp", "1")
        for row in csv_rows(out):
            x = float(row["var"])
            sigma = complex(float(row["re_sigma"]), float(row["im_sigma"]))
            eps = complex(float(row["re_eps"]), float(row["im_eps"]))
            rhs = 1j / (x * 0.1) * sigma
            assert abs((eps - 1.0) - rhs) <= 1e-9 * max(1.0, abs(rhs))

    def test_log_grid_over_q(self):
        _, out = run("sweep", "--var", "q", "--from", "0.01", "--to", "1", "--points", "3", "--log",
                     "--x", "0.1", "--y", "0.01", "--model", "classical")
        values = [float(row["var"]) for row in csv_rows(out)]
        assert values == pytest.approx([0.01, 0.1, 1.0], rel=1e-12)

    def test_output_file(self, tmp_path):
        target = tmp_path / "out" / "sweep.csv"
        status, out = run(*self.args, "--output", str(target))
        assert status == 0
        assert out == ""
        assert len(csv_rows(target.read_text())) == 18

    @pytest.mark.parametrize("extra", [
        ("--var", "x", "--from", "1", "--to", "0.1", "--points", "5", "--q", "1", "--y", "0.1"),
        ("--var", "x", "--from", "0.1", "--to", "1", "--points", "1", "--q", "1", "--y", "0.1"),
        ("--var", "x", "--from", "0.1", "--to", "1", "--points", "5", "--q", "1"),
    ])
    def test_invalid_specs(self, extra):
        assert run("sweep", *extra)[0] == 2

    def test_zero_workers(self):
        assert run("--workers", "0", *self.args)[0] == 2

    def test_mermin_curves_of_the_first_figures(self):
        peaks = []
        for q in ("0.1", "0.25", "0.5"):
            status, out = run("sweep", "--var", "x", "--from", "0.02", "--to", "2", "--points", "100",
                              "--q", q, "--y", "0.1", "--model", "mermin")
            assert status == 0
            rows = csv_rows(out)
            re_sigma = [float(row["re_sigma"]) for row in rows]
            im_sigma = [float(row["im_sigma"]) for row in rows]
            assert all(later < earlier for earlier, later in zip(re_sigma, re_sigma[1:]))
            maxima = [i for i in range(1, len(im_sigma) - 1)
                      if im_sigma[i - 1] < im_sigma[i] > im_sigma[i + 1]]
            assert len(maxima) == 1
            peaks.append(max(im_sigma))
        assert peaks[0] > peaks[1] > peaks[2]


class TestFigure:
    def test_preset_y_in_comments(self):
        status, out = run("figure", "--n", "1", "--y", "0.05", "--points", "4")
        assert status == 0
        blocks = out.split("\n\n\n")
        assert len(blocks) == 3
        fixed = [line for line in out.splitlines() if line.startswith("# fixed:")]
        assert fixed == ["# fixed: q=0.1,y=0.05", "# fixed: q=0.25,y=0.05", "# fixed: q=0.5,y=0.05"]

    def test_models_agree_at_large_x(self):
        status, out = run("figure", "--n", "3", "--points", "5")
        assert status == 0
        rows = [row for row in csv_rows(out) if float(row["var"]) == 2.0]
        magnitudes = [float(row["abs_sigma"]) for row in rows]
        assert len(magnitudes) == 3
        assert max(magnitudes) <= 1.1 * min(magnitudes)

    def test_q_sweep_preset(self):
        _, out = run("figure", "--n", "4", "--points", "3")
        assert "# fixed: x=0.1,y=0.01" in out.splitlines()
        assert len(csv_rows(out)) == 9

    def test_unknown_figure(self):
        assert run("figure", "--n", "6")[0] == 2

    def test_plot_script_requires_output(self, tmp_path):
        assert run("figure", "--n", "3", "--plot-script", str(tmp_path / "plot.py"))[0] == 2

    def test_files_and_plot_script(self, tmp_path):
        output = tmp_path / "fig1.csv"
        script = tmp_path / "plot_fig1.py"
        status, out = run("figure", "--n", "1", "--points", "3", "--output", str(output),
                          "--plot-script", str(script))
        assert status == 0
        assert out == ""
        for tag in ("q0.1", "q0.25", "q0.5"):
            path = tmp_path / f"fig1_{tag}.csv"
            assert len(csv_rows(path.read_text())) == 3
            assert str(path) in script.read_text()
        source = script.read_text()
        assert "import matplotlib.pyplot as plt" in source
        assert "'re_sigma'" in source


class TestValidate:
    def test_unknown_suite(self):
        assert run("validate", "--suite", "bogus")[0] == 2

    def test_non_positive_tolerance(self):
        assert run("validate", "--suite", "limits", "--tol", "-1")[0] == 2

    @pytest.mark.slow
    def test_limits_report(self):
        status, out = run("validate", "--suite", "limits")
        assert status == 0
        assert out.rstrip().endswith("PASSED")
        assert "[expected failure]" in out

    @pytest.mark.slow
    def test_json_report_and_failing_tolerance(self):
        status, out = run("validate", "--suite", "limits", "--tol", "1e-30", "--json")
        assert status == 1
        payload = json.loads(out)
        assert payload["suite"] == "limits"
        assert payload["passed"] is False
        assert all(len(case["computed"]) == 2 for case in payload["cases"])


class TestGlobalFlags:
    @pytest.mark.parametrize("value", ["0", "many"])
    def test_invalid_worker_environment(self, monkeypatch, capsys, value):
        monkeypatch.setenv("PLASMA_RESPONSE_WORKERS", value)
        assert run("eval", "--q", "1", "--x", "0.5", "--y", "0.1")[0] == 2
        assert "PLASMA_RESPONSE_WORKERS" in capsys.readouterr().err

    def test_version(self):
        assert run("--version")[0] == 0

    def test_missing_command(self):
        assert run()[0] == 2
