import json
import subprocess
import sys
from pathlib import Path

import pytest

from pancyclic.cli import main
from pancyclic.core import parse_edge_list
from pancyclic.generators import gen_extremal


@pytest.fixture()
def extremal_file(tmp_path):
    path = tmp_path / "g.edges"
    rc = main(["gen", "extremal", "--k", "3", "--out", str(path)])
    assert rc == 0
    return path


class TestGen:
    def test_extremal_writes_valid_edge_list(self, extremal_file):
        g = parse_edge_list(extremal_file.read_text())
        assert g.n == 12 and g.m == 21
        assert g == gen_extremal(3)

    def test_random_deterministic(self, tmp_path):
        a = tmp_path / "a.edges"
        b = tmp_path / "b.edges"
        assert main(["gen", "random", "--n", "12", "--k", "2", "--seed", "5",
                     "--out", str(a)]) == 0
        assert main(["gen", "random", "--n", "12", "--k", "2", "--seed", "5",
                     "--out", str(b)]) == 0
        assert a.read_text() == b.read_text()

    def test_stdout_when_no_out(self, capsys):
        assert main(["gen", "extremal", "--k", "2"]) == 0
        out = capsys.readouterr().out
        assert parse_edge_list(out).n == 4


class TestSpectrum:
    def test_full_json(self, extremal_file, capsys):
        rc = main(["spectrum", "--in", str(extremal_file), "--k", "3",
                   "--eps", "0.5", "--mode", "full", "--json"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["n"] == 12
        assert data["lengths"]["5"]["status"] == "absent"
        assert data["lengths"]["12"]["status"] in ("witnessed", "present")
        assert "steps" in data

    def test_oracle_mode_human(self, extremal_file, capsys):
        rc = main(["spectrum", "--in", str(extremal_file), "--mode", "oracle"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "absent: [5]" in out
        assert "pancyclic: False" in out

    def test_plot_data(self, extremal_file, tmp_path, capsys):
        csv = tmp_path / "plot.csv"
        rc = main(["spectrum", "--in", str(extremal_file), "--mode", "oracle",
                   "--json", "--plot-data", str(csv)])
        assert rc == 0
        rows = csv.read_text().strip().splitlines()
        assert rows[0] == "length,status"
        assert len(rows) == 1 + 10  # lengths 3..12
        assert "5,absent" in rows

    def test_out_file(self, extremal_file, tmp_path):
        out = tmp_path / "report.json"
        rc = main(["spectrum", "--in", str(extremal_file), "--k", "3",
                   "--mode", "full", "--json", "--out", str(out)])
        assert rc == 0
        assert json.loads(out.read_text())["n"] == 12


class TestReport:
    def test_round_trip_and_csv(self, extremal_file, tmp_path, capsys):
        saved = tmp_path / "r.json"
        assert main(["spectrum", "--in", str(extremal_file), "--k", "3",
                     "--mode", "full", "--json", "--out", str(saved)]) == 0
        csv = tmp_path / "r.csv"
        assert main(["report", "--in", str(saved), "--plot-data", str(csv)]) == 0
        assert csv.read_text().startswith("length,status")
        assert main(["report", "--in", str(saved)]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["n"] == 12


class TestLemma:
    def test_path_cover(self, extremal_file, capsys):
        rc = main(["lemma", "path-cover", "--in", str(extremal_file)])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        covered = [v for p in data["paths"] for v in p]
        assert sorted(covered) == list(range(12))

    def test_bfs_partition(self, extremal_file, capsys):
        rc = main(["lemma", "bfs-partition", "--in", str(extremal_file),
                   "--gamma", "0.25"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        count = sum(len(c["members"]) for c in data["clusters"])
        assert count + len(data["leftover"]) == 12
        assert count >= (1 - 0.25) * 12

    def test_dense_pair(self, extremal_file, capsys):
        rc = main(["lemma", "dense-pair", "--in", str(extremal_file),
                   "--k", "3", "--gamma", "0.25"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        lo, hi = data["interval"]
        assert set(map(int, data["paths"])) == set(range(lo, hi + 1))

    def test_easy_jump(self, extremal_file, capsys):
        path = ",".join(map(str, range(4)))  # clique 0 of the k=3 construction
        rc = main(["lemma", "easy-jump", "--in", str(extremal_file),
                   "--path", path, "--k", "1"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["length"] < 3

    def test_special_seq(self, extremal_file, capsys):
        rc = main(["lemma", "special-seq", "--in", str(extremal_file),
                   "--host", "0,1,2,3", "--k", "3"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["positions"]

    def test_zigzag_on_hamilton_path(self, tmp_path, capsys):
        from pancyclic.core import save_graph
        from conftest import complete_graph

        path = tmp_path / "k12.edges"
        save_graph(complete_graph(12), path)
        rc = main(["lemma", "zigzag", "--in", str(path),
                   "--path", ",".join(map(str, range(12))), "--c", "1",
                   "--k", "1"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["length"] == 10

    def test_zigzag_precondition_exit_code(self, extremal_file, capsys):
        rc = main(["lemma", "zigzag", "--in", str(extremal_file),
                   "--path", ",".join(map(str, range(12))), "--c", "1",
                   "--k", "3"])
        assert rc == 1
        err = capsys.readouterr().err
        assert "precondition failed" in err and "2k*(k+c)" in err

    def test_matching_cycle(self, tmp_path, capsys):
        from pancyclic.core import save_graph
        from conftest import complete_graph

        path = tmp_path / "k40.edges"
        save_graph(complete_graph(40), path)
        rc = main(["lemma", "matching-cycle", "--in", str(path), "--k", "1",
                   "--eps", "0.5"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["ejected"]) == 1
        assert len(data["cycle"]) == 39

    def test_n_minus_1(self, tmp_path, capsys):
        from pancyclic.core import save_graph
        from conftest import complete_graph

        path = tmp_path / "k13.edges"
        save_graph(complete_graph(13), path)
        rc = main(["lemma", "n-minus-1", "--in", str(path), "--k", "1"])
        assert rc == 0
        assert json.loads(capsys.readouterr().out)["length"] == 12


class TestExitCodes:
    def test_usage_error(self):
        assert main(["lemma", "nonsense", "--in", "x"]) == 2

    def test_missing_file(self):
        assert main(["spectrum", "--in", "/nonexistent/file", "--mode",
                     "oracle"]) == 2

    def test_cap_exhaustion(self, tmp_path):
        from pancyclic.core import save_graph
        from conftest import cycle_graph

        path = tmp_path / "c20.edges"
        save_graph(cycle_graph(20), path)
        # oracle spectrum of a 20-vertex graph exceeds the spectrum cap
        assert main(["spectrum", "--in", str(path), "--mode", "oracle"]) == 3

    def test_subprocess_entry_point(self, tmp_path):
        out = tmp_path / "g.edges"
        proc = subprocess.run(
            [sys.executable, "-m", "pancyclic", "gen", "extremal", "--k", "2",
             "--out", str(out)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert parse_edge_list(out.read_text()).n == 4


class TestExperimentScripts:
    SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"

    def test_extremal_report_script(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, str(self.SCRIPTS / "extremal_report.py"),
             "--outdir", str(tmp_path), "--kmax", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert (tmp_path / "extremal_k2.json").exists()
        assert (tmp_path / "extremal_k2.csv").read_text().startswith("length,status")
        assert "reports written" in proc.stdout

    def test_shortening_sweep_script(self):
        proc = subprocess.run(
            [sys.executable, str(self.SCRIPTS / "shortening_sweep.py"),
             "--instances", "6", "--nmax", "20"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert "n-1 ok" in proc.stdout
