import json
from pathlib import Path

import pytest

from flagcoh.cli import main, parse_space
from flagcoh.dynkin import DynkinDiagram, MarkedDiagram

GOLDEN = Path(__file__).parent / "golden" / "table6.txt"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coxeter(capsys):
    assert run(capsys, "coxeter", "D4")[:2] == (0, "6\n")


def test_degrees_and_cartan(capsys):
    assert run(capsys, "degrees", "F4")[1].split() == ["2", "6", "8", "12"]
    code, out, _ = run(capsys, "--json", "cartan", "C2")
    assert json.loads(out)["cartan"] == [[2, -1], [-2, 2]]


def test_gd_text(capsys):
    code, out, _ = run(capsys, "gd", "A3(2)")
    assert code == 0
    assert out.splitlines()[0] == "g.d. ∈ [2,2] (certified)"


def test_check_h_json(capsys):
    code, out, _ = run(capsys, "--json", "check-h", "B4(1)", "A2")
    data = json.loads(out)
    assert code == 0
    assert data["result"] == "Diagonalizable" and data["schema_version"] == 1


def test_inconclusive_exits_zero(capsys):
    code, out, _ = run(capsys, "check-h", "A3(2)", "A1")
    assert code == 0 and out.startswith("Inconclusive")


def test_check_h_with_tag(capsys):
    code, out, _ = run(capsys, "--json", "check-h", "A3(2)", "A2", "--tag", "0,0")
    assert json.loads(out)["mode"] == "tag-aware"


def test_check_r(capsys):
    code, out, _ = run(capsys, "check-r", "E8(8)", "A6")
    assert code == 0 and out.startswith("Diagonalizable")


def test_betti_reports_cap_and_cache(capsys):
    code, out, err = run(capsys, "betti", "Q4")
    assert code == 0 and out.strip() == "1 1 2 1 1"
    assert "degree cap" in err and "cache miss" in err
    code, out, err = run(capsys, "betti", "Q4")
    assert "cache hit" in err and out.strip() == "1 1 2 1 1"


def test_betti_full_flag(capsys):
    code, out, _ = run(capsys, "--json", "betti", "B2")
    assert sum(json.loads(out)["betti"]) == 8


def test_ed_and_schubert(capsys):
    assert run(capsys, "ed", "Q8")[1].startswith("e.d. = 7")
    assert run(capsys, "ed", "A5(2)")[1].startswith("e.d. = 5")
    code, out, _ = run(capsys, "--json", "schubert-mult", "4", "1", "1")
    assert json.loads(out)["product"] == [[2, 0, "1"], [1, 1, "1"]]


def test_normal_form(capsys):
    assert run(capsys, "normal-form", "A3(2)", "q1^5")[1].strip() == "0"
    code, out, _ = run(capsys, "--json", "normal-form", "A3(2)", "s1 + q1")
    assert json.loads(out)["zero"] is True


def test_veronese_and_tag_split(capsys):
    code, out, _ = run(capsys, "--json", "veronese", "4")
    data = json.loads(out)
    assert data["vertex_codimension"] == 9 and data["target_dimension"] == 7 and data["disjoint"]
    assert "I0 = {2}" in run(capsys, "tag-split", "3,1,1,0")[1]


def test_table8_and_sweep(capsys):
    code, out, _ = run(capsys, "table8")
    assert code == 0 and "NO" not in out and len(out.splitlines()) == 11
    code, out, _ = run(capsys, "--json", "table9-sweep", "--max-rank", "6")
    cells = json.loads(out)["cells"]
    assert len(cells) == 28 and all(c["consistent"] for c in cells)


def test_table6_golden(capsys, regen_golden):
    code, out, _ = run(capsys, "table6")
    assert code == 0
    if regen_golden:
        GOLDEN.write_text(out)
    assert out == GOLDEN.read_text()


def test_jobs_keep_order(capsys):
    serial = run(capsys, "table6", "--max-rank", "5")[1]
    parallel = run(capsys, "--jobs", "2", "table6", "--max-rank", "5")[1]
    assert serial == parallel


@pytest.mark.parametrize(
    "argv",
    [["coxeter", "Z4"], ["gd", "A3(7)"], ["gd", "Q2"], ["ed", "A5(3)"], ["check-h", "E6(1)", "A2"], ["normal-form", "A3(2)", "zz"]],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_unparseable_argv_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 2


def test_resource_cap_exit_3(capsys):
    code, _, err = run(capsys, "normal-form", "A2(1)", "q1^9", "--cap", "3")
    assert code == 3 and "cap" in err


def test_quadric_sugar():
    assert parse_space("Q1") == MarkedDiagram.parse("A1(1)")
    assert parse_space("Q5") == MarkedDiagram.parse("B3(1)")
    assert parse_space("Q6") == MarkedDiagram.parse("D4(1)")
    assert parse_space("A3") == DynkinDiagram("A", 3)
