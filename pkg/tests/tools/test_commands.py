"""
Tests for the command-line surface
"""

import json

import pytest

from nctorus_curvature.main import main
from nctorus_curvature.tools.commands import (
    EXIT_PASS,
    EXIT_USAGE,
    dump_lines,
    load_points,
    parse_grid,
)


class TestParsing:
    """Grids and point files"""

    def test_parse_grid(self):
        """Test parsing of start:stop:count"""
        assert parse_grid("-3:3:25") == (-3.0, 3.0, 25)
        assert parse_grid("0.5:1:3") == (0.5, 1.0, 3)

    @pytest.mark.parametrize("text", ["-3:3", "a:b:c", "0:1:2.5"])
    def test_invalid_grid(self, text):
        """Test rejection of malformed grids"""
        with pytest.raises(ValueError, match="Invalid grid"):
            parse_grid(text)

    def test_load_points(self, tmp_path):
        """Test point files mixing objects and arrays"""
        path = tmp_path / "points.json"
        path.write_text(json.dumps([{"s": 0.5, "t": 1.0}, {"s": -1}, [0.1, 0.2]]))
        assert load_points(str(path)) == [(0.5, 1.0), (-1.0,), (0.1, 0.2)]

    def test_load_points_not_a_list(self, tmp_path):
        """Test rejection of a point file that is not a list"""
        path = tmp_path / "points.json"
        path.write_text(json.dumps({"s": 0.5}))
        with pytest.raises(ValueError, match="expected a JSON list"):
            load_points(str(path))

    def test_load_points_missing_file(self, tmp_path):
        """Test rejection of a missing point file"""
        with pytest.raises(ValueError, match="Invalid point file"):
            load_points(str(tmp_path / "missing.json"))


class TestMain:
    """Exit codes and output of whole runs"""

    def test_unknown_metric(self, clean_env):
        """Test exit code 2 for an unregistered metric"""
        assert main(["scalar", "--metric", "flat3"]) == EXIT_USAGE

    def test_invalid_tolerance(self, clean_env):
        """Test exit code 2 for a negative tolerance"""
        assert main(["scalar", "--metric", "conformal3", "--tol", "-1"]) == EXIT_USAGE

    def test_invalid_configuration(self, clean_env):
        """Test exit code 2 for an invalid environment setting"""
        clean_env.setenv("NCG_QUAD_TOL", "5")
        assert main(["verify", "appendix-b"]) == EXIT_USAGE

    def test_missing_subcommand(self, clean_env):
        """Test that argparse rejects a run without subcommand"""
        with pytest.raises(SystemExit):
            main([])

    def test_no_one_form_laplacian(self, clean_env):
        """Test exit code 2 for the 1-form dump of the 2-torus"""
        argv = ["dump", "--metric", "conformal2", "--object", "one_form_density"]
        assert main(argv) == EXIT_USAGE

    def test_verify_json(self, clean_env, tmp_path):
        """Test the JSON report of a verification suite"""
        out = tmp_path / "report.json"
        assert main(["verify", "appendix-b", "--out", str(out)]) == EXIT_PASS
        report = json.loads(out.read_text())
        assert report["suite"] == "appendix-b"
        assert report["passed"] is True
        assert len(report["checks"]) == 28

    def test_verify_csv(self, clean_env, tmp_path):
        """Test the CSV report of a verification suite"""
        out = tmp_path / "report.csv"
        assert main(["verify", "appendix-b", "--format", "csv", "--out", str(out)]) == EXIT_PASS
        lines = out.read_text().splitlines()
        assert lines[0] == "suite,name,passed,max_error,detail"
        assert len(lines) == 29

    def test_dump_b2(self, clean_env, capsys):
        """Test that dump prints b2 terms to stdout"""
        assert main(["dump", "--metric", "conformal2"]) == EXIT_PASS
        lines = capsys.readouterr().out.splitlines()
        assert lines
        assert not any(line.startswith("#") for line in lines)


class TestDump:
    """Printed b2 and radial terms"""

    def test_radial_stage(self):
        """Test the radial reduction listing"""
        lines = dump_lines("conformal2", "scalar", "radial")
        assert lines
        assert all(line != "0" for line in lines)

    def test_aliases(self):
        """Test that an alias dumps the same terms"""
        assert dump_lines("conf2", "scalar", "b2") == dump_lines("conformal2", "scalar", "b2")


@pytest.mark.slow
class TestComparisonCommands:
    """Full comparisons through the command line"""

    def test_scalar(self, clean_env, tmp_path):
        """Test the CSV header of a scalar comparison"""
        out = tmp_path / "scalar.csv"
        argv = ["scalar", "--metric", "conformal3", "--grid=-3:3:25", "--format", "csv"]
        assert main(argv + ["--out", str(out)]) == EXIT_PASS
        header = out.read_text().splitlines()[0]
        assert header == (
            "metric,object,entry,prefix,basis_word,point,engine,reference,abs_err,rel_err"
        )

    def test_points_file(self, clean_env, tmp_path):
        """Test a scalar comparison at explicit points"""
        points = tmp_path / "points.json"
        points.write_text(json.dumps([{"s": 0.5, "t": -0.3}, {"s": 1.5, "t": 2.0}]))
        out = tmp_path / "report.json"
        argv = ["scalar", "--metric", "nonconformal3", "--points", str(points)]
        assert main(argv + ["--out", str(out)]) == EXIT_PASS
        report = json.loads(out.read_text())
        assert all(len(table["rows"]) == 2 for table in report["tables"])

    def test_ricci_points_file(self, clean_env, tmp_path):
        """Test the non-conformal Ricci comparison at explicit points"""
        points = tmp_path / "points.json"
        points.write_text(json.dumps([{"s": -1.5, "t": 0.7}, {"s": 2.0, "t": -2.5}]))
        out = tmp_path / "ricci.json"
        argv = ["ricci", "--metric", "nonconformal3", "--points", str(points)]
        assert main(argv + ["--out", str(out)]) == EXIT_PASS
        report = json.loads(out.read_text())
        assert report["passed"] is True
        entries = {tuple(table["entry"]) for table in report["tables"]}
        assert entries == {(i, j) for i in (1, 2, 3) for j in (1, 2, 3)}
        assert all(len(table["rows"]) == 2 for table in report["tables"])

    def test_ricci_grid(self, clean_env, tmp_path):
        """Test the non-conformal Ricci comparison on the full grid"""
        out = tmp_path / "ricci.json"
        argv = ["ricci", "--metric", "nonconformal3", "--grid=-3:3:25"]
        assert main(argv + ["--out", str(out)]) == EXIT_PASS

    def test_abelianize(self, clean_env, capsys):
        """Test the classical scalar curvature of the conformal metric"""
        assert main(["abelianize", "--metric", "conformal3"]) == EXIT_PASS
        report = json.loads(capsys.readouterr().out)
        assert report["engine"]["value"] == report["expected"]["value"]

    def test_abelianize_ricci(self, clean_env, capsys):
        """Test the classical Ricci tensor of the non-conformal metric"""
        argv = ["abelianize", "--metric", "nonconformal3", "--object", "ricci"]
        assert main(argv) == EXIT_PASS
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        assert len(report["engine"]) == 9
