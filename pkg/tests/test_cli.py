import json

from utmv.cli import main
from utmv.instances import generate_instance
from utmv.io import write_edge_list, write_matrix_file


def test_test_command(tmp_path, capsys):
    path = tmp_path / "m.txt"
    write_matrix_file(generate_instance("permutation", 12, 3), path)
    assert main(["test", str(path), "--tester", "permutation", "--seed", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "accept" and out["queries"] == 33


def test_test_command_wrong_domain(tmp_path, capsys):
    path = tmp_path / "m.txt"
    write_matrix_file(generate_instance("random", 4, 3), path)
    assert main(["test", str(path), "--tester", "unitary"]) == 2


def test_experiment_command(tmp_path, capsys):
    out = tmp_path / "e.csv"
    assert main(["experiment", "--tester", "diagonal", "--n", "16", "--trials", "5", "--out", str(out)]) == 0
    assert "accept_rate=1.000000" in capsys.readouterr().out
    assert out.read_text().startswith("tester,n,domain,trial,seed,verdict,queries,us\n")


def test_verify_gadgets_command(capsys):
    assert main(["verify-gadgets", "--kind", "perm"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_graph_command(tmp_path, capsys):
    path = tmp_path / "g.txt"
    write_edge_list(generate_instance("path", 4, 0), path)
    assert main(["graph", str(path), "--samples", "2", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "n=4 edges=3" in out and "vertex 1: degree=2 neighbors=[0, 2]" in out


def test_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 int\n1 2 3\n")
    assert main(["test", str(path), "--tester", "trace"]) == 2
    assert "line 3" in capsys.readouterr().err
