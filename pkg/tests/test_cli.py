import json

import pytest

from orienteq.cli import run
from orienteq.corpus import format_graph, named_graphs, parse_graph
from orienteq.errors import GraphParseError

NG = named_graphs()


@pytest.fixture
def c3_file(tmp_path):
    path = tmp_path / "C3.g"
    path.write_text(format_graph(NG["C3"]))
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_parse_examples():
    g = parse_graph("v 3\ne 0 1\ne 1 2\ne 2 0\n")
    assert g == NG["C3"]
    assert parse_graph("# loop\nv 1\ne 0 0\n") == NG["L1"]
    with pytest.raises(GraphParseError):
        parse_graph("v 2\ne 0 5\n")
    with pytest.raises(GraphParseError):
        parse_graph("e 0 1\n")
    with pytest.raises(GraphParseError):
        parse_graph("v 0\n")


def test_round_trip():
    for name, g in NG.items():
        assert parse_graph(format_graph(g)) == g, name


def test_tutte_command(capsys, c3_file):
    code, payload = run_json(capsys, ["tutte", c3_file])
    assert code == 0
    assert payload["coeffs"] == [[0, 1, 1], [1, 0, 1], [2, 0, 1]]
    assert payload["evals"]["(0,1)"] == 1


def test_orientations_command(capsys, c3_file):
    code, payload = run_json(capsys, ["orientations", c3_file])
    assert code == 0
    assert payload["total"] == 8
    assert payload["acyclic"] == 6
    assert payload["totally_cyclic"] == 2


def test_classes_command(capsys, c3_file):
    code, payload = run_json(
        capsys, ["classes", c3_file, "--relation", "eulerian", "--restrict", "totally_cyclic"]
    )
    assert code == 0
    assert payload["count"] == 1
    assert payload["blocks"] == [["+++", "---"]]


def test_bijection_commands(capsys, c3_file):
    code, payload = run_json(capsys, ["bijection-forward", c3_file, "+++"])
    assert code == 0
    assert payload["tree"] == [2, 3]

    code, payload = run_json(capsys, ["bijection-forward", c3_file, "+++", "--trace"])
    assert code == 0
    assert [ev["action"] for ev in payload["trace"]] == ["unorient", "unorient", "delete"]

    code, payload = run_json(capsys, ["bijection-inverse", c3_file, "2,3"])
    assert code == 0
    assert payload["orientation"] == "+++"


def test_order_flag_keeps_file_indices(capsys, c3_file):
    # activity order e3 < e1 < e2: forward output still uses file indices
    code, payload = run_json(
        capsys, ["bijection-forward", c3_file, "+++", "--order", "3,1,2"]
    )
    assert code == 0
    tree = payload["tree"]
    assert len(tree) == 2 and set(tree) <= {1, 2, 3}
    code, back = run_json(
        capsys, ["bijection-inverse", c3_file, ",".join(map(str, tree)), "--order", "3,1,2"]
    )
    assert code == 0
    code, again = run_json(
        capsys, ["bijection-forward", c3_file, back["orientation"], "--order", "3,1,2"]
    )
    assert again["tree"] == tree


def test_verify_command(capsys, c3_file, tmp_path):
    code, payload = run_json(capsys, ["verify", c3_file])
    assert code == 0
    assert payload["ok"]

    b1 = tmp_path / "B1.g"
    b1.write_text(format_graph(NG["B1"]))
    code, payload = run_json(capsys, ["verify", str(b1)])
    assert code == 0
    assert payload["identities"]["eulerian_classes_BO=T(0,1)"]["actual"] == 0


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.g"
    bad.write_text("v 2\ne 0 5\n")
    code, payload = run_json(capsys, ["tutte", str(bad)])
    assert code == 2 and payload["kind"] == "parse"

    b1 = tmp_path / "B1.g"
    b1.write_text(format_graph(NG["B1"]))
    code, payload = run_json(capsys, ["bijection-forward", str(b1), "+"])
    assert code == 3 and payload["kind"] == "invalid-input"

    c3 = tmp_path / "C3.g"
    c3.write_text(format_graph(NG["C3"]))
    code, payload = run_json(capsys, ["bijection-inverse", str(c3), "1,2"])
    assert code == 3  # internally active tree

    code, payload = run_json(capsys, ["orientations", str(c3), "--cap", "2"])
    assert code == 4 and payload["kind"] == "resource-cap"


def test_deterministic_output(capsys, c3_file):
    run(["verify", c3_file])
    first = capsys.readouterr().out
    run(["verify", c3_file])
    assert capsys.readouterr().out == first


def test_corpus_command(capsys, tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    code, payload = run_json(capsys, ["corpus", "--out", str(out1), "--seed", "0", "--count", "5"])
    assert code == 0
    run(["corpus", "--out", str(out2), "--seed", "0", "--count", "5"])
    capsys.readouterr()
    names1 = sorted(p.name for p in out1.iterdir())
    assert names1 == sorted(p.name for p in out2.iterdir())
    for name in names1:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
        g = parse_graph((out1 / name).read_text())
        assert g.is_connected()
        assert g.vertex_count <= 6 and g.edge_count <= 9


def test_corpus_limits(capsys, tmp_path):
    out = tmp_path / "c"
    code, _ = run_json(
        capsys,
        ["corpus", "--out", str(out), "--seed", "1", "--count", "8",
         "--max-vertices", "4", "--max-edges", "6"],
    )
    assert code == 0
    for p in out.iterdir():
        g = parse_graph(p.read_text())
        assert g.vertex_count <= 4 and g.edge_count <= 6
