import json

import pytest

from antichains.cli import main
from conftest import NINE_POINT_TEXT


@pytest.fixture()
def nine_point_file(tmp_path):
    p = tmp_path / "nine_point.txt"
    p.write_text(NINE_POINT_TEXT)
    return str(p)


@pytest.fixture()
def witness_files(tmp_path, witness10):
    from antichains import format_family, graph_to_json

    g, fam = witness10
    gp = tmp_path / "w10.json"
    gp.write_text(json.dumps(graph_to_json(g)))
    fp = tmp_path / "w10.txt"
    fp.write_text(format_family(fam))
    return str(gp), str(fp)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_nine_point_levels_24(self, capsys, nine_point_file):
        code, out, _ = run(capsys, "check", "--family", nine_point_file, "--K", "2,4")
        assert "maximal: True" in out
        assert "strongly maximal: False" in out
        assert code == 1  # a requested verdict is false

    def test_nine_point_234_json(self, capsys, nine_point_file):
        code, out, _ = run(capsys, "check", "--family", nine_point_file, "--K", "2,3,4", "--json")
        data = json.loads(out)
        assert data["maximal"] is False
        assert code == 1

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", "--family", "nope.txt", "--K", "2,4")
        assert code == 2
        assert "error:" in err

    def test_all_pass_exit_zero(self, capsys, tmp_path):
        p = tmp_path / "fam.txt"
        p.write_text("12,13,14,23,24,34")  # the full pair level on [4]
        code, out, _ = run(capsys, "check", "--family", str(p), "--K", "2,3")
        assert code == 0


class TestConstruct:
    def test_l4(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "8", "--K", "2,4", "--l4")
        assert code == 0
        assert "objective=16" in out

    def test_general_json(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "10", "--K", "2,5", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["top_cliques"] == 2
        assert data["graph"]["n"] == 10

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "4", "--K", "2,4", "--dot")
        assert code == 0
        assert "graph G {" in out

    def test_needs_K(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "8")
        assert code == 2


class TestCanonical:
    def test_nine_point_graph(self, capsys, tmp_path, nine_point_family):
        from antichains import graph_of, graph_to_json

        gp = tmp_path / "g.json"
        gp.write_text(json.dumps(graph_to_json(graph_of(nine_point_family))))
        code, out, _ = run(capsys, "canonical", "--graph", str(gp), "--K", "2,4", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["size"] == 21
        assert data["k_sparse"] is True
        assert data["strong_maximality_criterion"] is False

    def test_unsaturated_graph_errors(self, capsys, tmp_path):
        gp = tmp_path / "g.json"
        gp.write_text(json.dumps({"n": 4, "edges": [[1, 2]]}))
        code, _, err = run(capsys, "canonical", "--graph", str(gp), "--K", "2,4")
        assert code == 2
        assert "saturated" in err


class TestDual:
    def test_nine_point(self, capsys, nine_point_file):
        code, out, _ = run(capsys, "dual", "--family", nine_point_file, "--json")
        data = json.loads(out)
        assert code == 0
        assert data["css"] is True
        assert data["dual"]["n"] == 21

    def test_non_css(self, capsys, tmp_path):
        p = tmp_path / "fam.txt"
        p.write_text("12,123")
        code, out, _ = run(capsys, "dual", "--family", str(p), "--json")
        assert code == 1
        assert json.loads(out)["css"] is False


class TestSearch:
    def test_n4(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "4", "--K", "2,4", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["min_antichain_size"] == 1

    def test_flags(self, capsys):
        code, out, _ = run(
            capsys, "search", "--n", "5", "--K", "2,3,4", "--jobs", "2", "--no-prune"
        )
        assert code == 0
        assert "size 3" in out

    def test_witness_dot(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "4", "--K", "2,4", "--dot")
        assert code == 0
        assert "graph G {" in out and "1 -- 2;" in out

    def test_jobs_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("ANTICHAIN_JOBS", "2")
        code, out, _ = run(capsys, "search", "--n", "4", "--K", "2,4", "--json")
        assert code == 0
        assert json.loads(out)["min_antichain_size"] == 1

    def test_bad_n(self, capsys):
        code, _, err = run(capsys, "search", "--n", "12", "--K", "2,4")
        assert code == 2


class TestBounds:
    def test_constants(self, capsys):
        code, out, _ = run(capsys, "bounds", "--constants", "--json")
        data = json.loads(out)
        assert code == 0
        assert 0.2324404 < data["upper_bound_constant"] < 0.2324410

    def test_l(self, capsys):
        code, out, _ = run(capsys, "bounds", "--l", "4", "--json")
        data = json.loads(out)
        assert data["objective_coeff"] == [3, 16]
        assert data["antichain_coeff"] == [5, 16]

    def test_gamma(self, capsys):
        code, out, _ = run(capsys, "bounds", "--gamma", "0.29", "--json")
        data = json.loads(out)
        assert abs(data["first_bound"] - 0.232) < 1e-9

    def test_exclusive_flags(self, capsys):
        code, _, err = run(capsys, "bounds", "--l", "4", "--gamma", "0.2")
        assert code == 2

    def test_bad_gamma(self, capsys):
        code, _, err = run(capsys, "bounds", "--gamma", "0.7")
        assert code == 2


class TestTable:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "table", "--nmax", "5")
        assert code == 0
        assert "construction" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "table", "--nmax", "9", "--json")
        rows = json.loads(out)
        assert rows[0]["size_24"] == 1
        assert rows[-1]["exact_24"] is False


class TestVerify:
    def test_witness10(self, capsys, witness_files):
        gp, fp = witness_files
        code, out, _ = run(capsys, "verify", "--graph", gp, "--antichain", fp, "--K", "2,4", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["ok"] is True
        assert data["objective"] == 25
        assert data["per_edge_clique_counts"]["4"] == [1, 1]

    def test_invalid_certificate(self, capsys, witness_files, tmp_path):
        gp, _ = witness_files
        bad = tmp_path / "bad.txt"
        bad.write_text("12")
        code, out, _ = run(capsys, "verify", "--graph", gp, "--antichain", str(bad), "--K", "2,4")
        assert code == 1
        assert "INVALID" in out
