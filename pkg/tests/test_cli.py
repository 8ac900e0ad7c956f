import json
import os

import pytest

import cli
from ordinalmotifs.engine.scale import ScaleFamily, build_scale
from ordinalmotifs.utils.context_utils import CSV, read_context, write_context

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def cube_path(tmp_path):
    path = tmp_path / "cube.cxt"
    write_context(build_scale(ScaleFamily.CONTRANOMINAL, 3), path)
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_concepts(capsys):
    code, out, _ = run(capsys, "concepts", os.path.join(FIXTURES, "nominal3.cxt"))
    assert code == 0
    assert "extents: 5" in out.splitlines()


def test_concepts_json_lists_extents(capsys):
    code, out, _ = run(capsys, "concepts", os.path.join(FIXTURES, "nominal3.cxt"), "--list", "--json")
    document = json.loads(out)
    assert document["schema_version"] == 1
    assert document["extents"] == 5
    assert [] in document["extent_list"]


def test_motifs_json(capsys, cube_path):
    code, out, _ = run(capsys, "motifs", cube_path, "--families", "contranominal", "--all-motifs", "--json")
    assert code == 0
    family = json.loads(out)["families"]["contranominal"]
    assert (family["total"], family["maximal"], family["largest"]) == (4, 1, 3)
    assert len(family["motifs"]) == 4


def test_motifs_table(capsys, cube_path):
    code, out, _ = run(capsys, "motifs", cube_path)
    assert code == 0
    assert "maximal lf-sm" in out
    assert "contranominal" in out


def test_cover_json(capsys, cube_path):
    code, out, _ = run(capsys, "cover", cube_path, "--json")
    document = json.loads(out)
    assert document["covered"] == document["total_extents"] == 8
    assert document["steps"][0]["families"] == ["contranominal", "crown"]
    assert document["family_ratios"] == {"contranominal": 0.5, "crown": 0.5}


def test_cover_normalized_writes_csvs(capsys, cube_path, tmp_path):
    curve, ratios = tmp_path / "curve.csv", tmp_path / "ratios.csv"
    code, out, _ = run(capsys, "cover", cube_path, "--heuristic", "normalized", "--k", "all",
                       "--coverage-csv", str(curve), "--family-curves", "--ratios-csv", str(ratios))
    assert code == 0
    assert out.splitlines()[-1] == "covered 8 of 8 extents"
    assert curve.read_text().startswith("series,step,new,cumulative\n")
    assert "combined" in curve.read_text()
    assert ratios.read_text().startswith("step,")


def test_explain(capsys):
    code, out, _ = run(capsys, "explain", os.path.join(FIXTURES, "crown_sample.cxt"), "--k", "1")
    lines = out.splitlines()
    assert lines[0] == ("1. Each combination of the elements Basil, Sauces and Mugwort has a unique"
                        " set of properties they have in common.")
    assert lines[1].startswith("   The elements ")


def test_basis_to_file(capsys, cube_path, tmp_path):
    out_path = tmp_path / "basis.csv"
    code, _, _ = run(capsys, "basis", cube_path, "--out", str(out_path), "--out-format", CSV)
    assert code == 0
    basis = read_context(out_path)
    assert basis.attributes == ("1:1", "1:2", "1:3")
    assert len(basis.extents()) == 8


def test_basis_rejects_partial_covering(capsys, cube_path):
    code, _, err = run(capsys, "basis", cube_path, "--families", "nominal")
    assert code == 1
    assert "covering misses" in err


def test_scaling_dimension(capsys, cube_path):
    code, out, _ = run(capsys, "scaling-dim", cube_path, "--scales", "ordinal:2", "--max-d", "3")
    assert (code, out.strip()) == (0, "3")
    code, out, _ = run(capsys, "scaling-dim", cube_path, "--scales", "ordinal:2", "--max-d", "2")
    assert out.strip() == "unknown > 2"


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "concepts", str(tmp_path / "nope.cxt"))
    assert code == 1
    assert err.startswith("error: ")


def test_bad_arguments_exit_with_usage():
    with pytest.raises(SystemExit) as info:
        cli.main(["cover", "x.cxt", "--heuristic", "weighted"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["motifs", "x.cxt", "--families", "lattice"])


def test_size_arguments():
    assert cli.parse_sizes("crown=4, nominal=3") == {ScaleFamily.CROWN: 4, ScaleFamily.NOMINAL: 3}
    assert ScaleFamily.CROWN not in cli.parse_sizes("2")
    assert cli.parse_k("all") is None
    with pytest.raises(ValueError):
        cli.parse_sizes("crown")
