"""CLI verbs: exit codes, determinism, schema round-trips."""

import json

import pytest

import corpus
from grpd import cli
from grpd import groupoid as gpd
from grpd import paction as pact
from grpd import leavitt as lv
from grpd.exactlin import Field

Q = Field(0)


@pytest.fixture
def files(tmp_path):
    """A directory with groupoid, algebra, action and graph files."""
    gfile = tmp_path / "z2.json"
    gfile.write_text(json.dumps(gpd.to_dict(gpd.cyclic_group(2))))

    afile = tmp_path / "qq.json"
    afile.write_text(json.dumps(corpus.componentwise(Q, 2).to_dict()))

    pa = corpus.swap_action()
    act = tmp_path / "swap.json"
    act.write_text(json.dumps(pact.action_to_dict(pa, "z2.json", "qq.json")))

    bad = tmp_path / "bad_action.json"
    bad.write_text(json.dumps(pact.action_to_dict(corpus.mutant_p3(), "pair2.json", "q4.json")))
    (tmp_path / "pair2.json").write_text(json.dumps(gpd.to_dict(gpd.pair_groupoid(2))))
    (tmp_path / "q4.json").write_text(json.dumps(corpus.componentwise(Q, 4).to_dict()))

    graph = tmp_path / "a3.json"
    graph.write_text(json.dumps(lv.graph_to_dict(corpus.corpus_graphs()["A3"])))
    loop = tmp_path / "loop.json"
    loop.write_text(json.dumps(lv.graph_to_dict(corpus.cyclic_graphs()["loop"])))

    qz2 = tmp_path / "qz2.json"
    qz2.write_text(json.dumps(corpus.group_algebra(Q, 2).to_dict()))
    return tmp_path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_groupoid_ok(files, capsys):
    code, out = run(capsys, "check-groupoid", str(files / "z2.json"))
    assert code == 0
    assert "no violations" in out


def test_check_action_ok_and_bad(files, capsys):
    code, _ = run(capsys, "check-action", str(files / "swap.json"))
    assert code == 0
    code, out = run(capsys, "check-action", str(files / "bad_action.json"))
    assert code == 1
    assert "P3" in out


def test_analyze_group_algebra(files, capsys):
    code, out = run(capsys, "--json", "analyze", str(files / "qz2.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["dim"] == 2 and rep["semisimple"] is True and rep["blocks"] == [1, 1]


def test_build_skew(files, capsys):
    code, out = run(capsys, "--json", "build-skew", str(files / "swap.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["dim"] == 4 and rep["blocks"] == [4] and rep["grading_ok"] is True


def test_groupoid_ring_verb(files, capsys):
    code, out = run(capsys, "--json", "groupoid-ring", str(files / "pair2.json"),
                    str(files / "qz2.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["dim"] == 8


def test_matrix_ring_verb(files, capsys):
    code, out = run(capsys, "--json", "matrix-ring", "-n", "3")
    assert code == 0
    rep = json.loads(out)
    assert rep["dim"] == 9 and rep["matrix_units_ok"] and rep["matrix_unit_checks"] == 81


def test_partial_group_algebra_verb(files, capsys):
    code, out = run(capsys, "--json", "partial-group-algebra", str(files / "z2.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["dim"] == 3 and rep["blocks"] == [1, 1, 1] and rep["semigroup_size"] == 3


def test_leavitt_verb(files, capsys):
    code, out = run(capsys, "--json", "leavitt", str(files / "a3.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["dim"] == 9 and rep["block_sizes"] == [3]
    assert rep["two_model_dims"] == [9, 9] and rep["phi_relations_ok"] is True


def test_leavitt_loop_reports_not_artinian(files, capsys):
    code, out = run(capsys, "leavitt", str(files / "loop.json"))
    assert code == 0
    assert "not artinian" in out


def test_globalize_verb(files, capsys):
    code, out = run(capsys, "--json", "globalize", str(files / "swap.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["violations"] == [] and rep["finite_type"] is True


def test_maschke_verb(files, capsys):
    code, out = run(capsys, "--json", "maschke", str(files / "swap.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["implication_isotropy"] == "holds"
    assert rep["implication_trace"] == "holds"
    assert rep["skew_semisimple"] is True


def test_malformed_input_exit_2(files, capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert cli.main(["analyze", str(broken)]) == 2
    capsys.readouterr()
    missing = tmp_path / "missing_fields.json"
    missing.write_text(json.dumps({"dim": 2}))
    assert cli.main(["analyze", str(missing)]) == 2
    capsys.readouterr()
    assert cli.main(["check-groupoid", str(tmp_path / "nope.json")]) == 2
    capsys.readouterr()


def test_deterministic_output(files, capsys):
    _, out1 = run(capsys, "--json", "leavitt", str(files / "a3.json"))
    _, out2 = run(capsys, "--json", "leavitt", str(files / "a3.json"))
    assert out1 == out2
    _, out3 = run(capsys, "--json", "maschke", str(files / "swap.json"))
    _, out4 = run(capsys, "--json", "maschke", str(files / "swap.json"))
    assert out3 == out4


def test_schema_roundtrips_are_fixpoints(files):
    for name, loader, emitter in [
        ("z2.json", gpd.from_dict, gpd.to_dict),
        ("a3.json", lv.graph_from_dict, lv.graph_to_dict),
    ]:
        d1 = json.loads((files / name).read_text())
        d2 = emitter(loader(d1))
        assert emitter(loader(d2)) == d2
    from grpd.algebra import StructureAlgebra

    d1 = json.loads((files / "qq.json").read_text())
    d2 = StructureAlgebra.from_dict(d1).to_dict()
    assert StructureAlgebra.from_dict(d2).to_dict() == d2
    # action schema
    d1 = json.loads((files / "swap.json").read_text())
    g0 = gpd.from_dict(json.loads((files / "z2.json").read_text()))
    amb = StructureAlgebra.from_dict(json.loads((files / "qq.json").read_text()))
    pa = pact.action_from_dict(d1, g0, amb)
    d2 = pact.action_to_dict(pa, d1["groupoid"], d1["algebra"])
    pa2 = pact.action_from_dict(d2, g0, amb)
    assert pact.action_to_dict(pa2, d1["groupoid"], d1["algebra"]) == d2
