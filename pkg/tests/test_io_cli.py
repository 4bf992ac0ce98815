import json

import jsonschema
import pytest

from cellci.cli import main
from cellci.enumeration import enumerate_connected
from cellci.grid import CellCollection
from cellci.io import CellsParseError, parse_cells, render_ascii, serialize_cells
from cellci.schema import REPORT_SCHEMA

from shapes import DIAGONAL, DOMINO, SINGLE


class TestParse:
    def test_domino(self):
        assert parse_cells("0 0\n1 0\n") == DOMINO

    def test_dedupe(self):
        assert parse_cells("0 0\n0 0\n") == SINGLE

    def test_comments_and_blanks(self):
        assert parse_cells("# a domino\n\n  0 0  \n1 0 # right\n") == DOMINO

    def test_one_line(self):
        assert parse_cells("0 0; 1 1") == DIAGONAL

    def test_bad_coordinate(self):
        with pytest.raises(CellsParseError) as err:
            parse_cells("0 x\n")
        assert err.value.lineno == 1

    def test_bad_arity(self):
        with pytest.raises(CellsParseError, match="line 2"):
            parse_cells("0 0\n1 2 3\n")


def test_round_trip_rank3_corpus():
    for form in enumerate_connected(3):
        C = CellCollection(form)
        assert parse_cells(serialize_cells(C)) == C
        assert parse_cells(serialize_cells(form, one_line=True)) == C


class TestRender:
    def test_single(self):
        assert render_ascii(SINGLE) == "■\n"

    def test_domino(self):
        assert render_ascii(DOMINO, ascii_only=True) == "##\n"

    def test_diagonal(self):
        assert render_ascii(DIAGONAL, ascii_only=True) == ".#\n#.\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"domino": "0 0\n1 0\n", "diag": "0 0\n1 1\n", "bad": "0 x\n", "block": "0 0\n1 0\n0 1\n1 1\n"}.items():
        p = tmp_path / f"{name}.cells"
        p.write_text(text)
        out[name] = str(p)
    out["missing"] = str(tmp_path / "missing.cells")
    return out


class TestCli:
    def test_decide_domino(self, files, capsys):
        assert main(["decide", files["domino"]]) == 0
        assert "NOT a complete intersection" in capsys.readouterr().out

    def test_decide_diag(self, files, capsys):
        assert main(["decide", files["diag"]]) == 0
        out = capsys.readouterr().out
        assert "complete intersection" in out and "NOT" not in out

    def test_missing_file(self, files, capsys):
        assert main(["decide", files["missing"]]) == 2

    def test_parse_error(self, files, capsys):
        assert main(["mu", files["bad"]]) == 2
        assert "line 1" in capsys.readouterr().err

    def test_usage_error(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_budget_exit_codes(self, files, capsys):
        assert main(["groebner", files["block"], "--budget", "0"]) == 3
        assert main(["decide", files["block"], "--budget", "0"]) == 3

    def test_json_report_schema_and_determinism(self, files, capsys):
        outputs = []
        for _ in range(2):
            assert main(["decide", files["domino"], "--json"]) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        report = json.loads(outputs[0])
        jsonschema.validate(report, REPORT_SCHEMA)
        assert list(report)[:8] == ["rank", "vertices", "mu", "height", "lattice_rank", "is_chessboard", "is_ci", "status"]
        assert report["certificate"]["witness"] == [[0, 0], [1, 0]]

    def test_json_with_timings_is_schema_valid(self, files, capsys):
        assert main(["decide", files["diag"], "--json", "--timings"]) == 0
        jsonschema.validate(json.loads(capsys.readouterr().out), REPORT_SCHEMA)

    def test_generators_mu_height(self, files, capsys):
        assert main(["generators", files["domino"]]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 3
        assert main(["mu", files["block"]]) == 0
        assert capsys.readouterr().out.strip() == "9"
        assert main(["height", files["block"], "--order", "rowmajor"]) == 0
        assert capsys.readouterr().out.strip() == "4"

    def test_groebner_json(self, files, capsys):
        assert main(["groebner", files["domino"], "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["basis"]) == 3 and data["order"] == "lex(snake)"

    def test_enumerate_listing(self, capsys):
        assert main(["enumerate", "--max-rank", "2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 5
        assert {parse_cells(l).rank for l in lines} == {1, 2}

    def test_enumerate_check_theorem(self, capsys):
        assert main(["enumerate", "--max-rank", "3", "--check-theorem"]) == 0
        assert "0 violations" in capsys.readouterr().out

    def test_enumerate_check_theorem_json(self, capsys):
        assert main(["enumerate", "--max-rank", "2", "--check-theorem", "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["violations"] == 0

    def test_render(self, files, capsys):
        assert main(["render", files["diag"], "--ascii"]) == 0
        assert capsys.readouterr().out == ".#\n#.\n"

    def test_violation_exit_code(self, monkeypatch, capsys):
        import cellci.decide as decide_mod

        monkeypatch.setattr(decide_mod, "mu", lambda C: C.rank + 7)
        assert main(["enumerate", "--max-rank", "1", "--check-theorem"]) == 1
