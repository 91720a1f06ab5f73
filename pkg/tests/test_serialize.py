"""Tests for text grammars and JSON/CSV codecs."""
import json

import pytest

from walled_brauer.algebra.coeff_ring import LaurentPoly
from walled_brauer.algebra.diagrams import AlgebraElement, identity, validate
from walled_brauer.errors import CellLabelError, WalledBrauerError
from walled_brauer.storage.serialize import (
    element_from_json,
    element_to_json,
    load_element,
    parse_cell,
    parse_shape,
    restriction_csv,
    restriction_report,
    structure_csv,
    structure_table,
)
from walled_brauer.types import CellLabel, Partition, RestrictionTerm, SplitShape

ONE = Partition.of(1)


class TestGrammars:
    """Tests for cell and shape labels."""

    def test_parse_cell(self):
        """Test the compact cell form."""
        assert parse_cell("2,1;0;l=1") == CellLabel(l=1, lam_l=Partition.of(2, 1))
        assert parse_cell(" 0 ; 1 ; l = 0 ") == CellLabel(l=0, lam_r=ONE)

    def test_cell_round_trip_text(self):
        """Test to_text is accepted by the parser."""
        cell = CellLabel(l=2, lam_l=Partition.of(2, 2), lam_r=ONE)
        assert parse_cell(cell.to_text()) == cell

    @pytest.mark.parametrize("text", ["2,1;0", "a;0;l=1", "1;1;l=", "1,2;0;l=0"])
    def test_bad_cells(self, text):
        """Test malformed labels."""
        with pytest.raises(ValueError):
            parse_cell(text)

    def test_bad_cell_is_cell_label_error(self):
        """Test the grammar error type."""
        with pytest.raises(CellLabelError):
            parse_cell("1;1")

    def test_parse_shape(self):
        """Test the split shape form."""
        assert parse_shape("1,0|0,1") == SplitShape(r1=1, s1=0, r2=0, s2=1)
        with pytest.raises(CellLabelError):
            parse_shape("1,0,0,1")


class TestElementJson:
    """Tests for element files."""

    def test_element_to_json(self):
        """Test the layout of an element."""
        arc = validate(1, 1, [(1, 2), (-1, -2)])
        payload = element_to_json(AlgebraElement.from_diagram(arc, LaurentPoly({1: 1, -1: "1/2"})))
        assert payload["schema"] == 1
        assert payload["r"] == 1 and payload["s"] == 1
        assert payload["terms"][0]["coeff"] == [[-1, "1/2"], [1, "1/1"]]

    def test_element_survives_json(self):
        """Test reading back what was written."""
        arc = validate(1, 1, [(1, 2), (-1, -2)])
        x = AlgebraElement.from_diagram(arc, 3) + AlgebraElement.unit(1, 1)
        assert element_from_json(json.loads(json.dumps(element_to_json(x)))) == x

    def test_bare_diagram(self):
        """Test a diagram object reads with coefficient one."""
        payload = {"r": 1, "s": 0, "pairs": [[1, -1]]}
        assert element_from_json(payload) == AlgebraElement.from_diagram(identity(1, 0))

    def test_invalid_diagram(self):
        """Test a pairing that breaks the wall."""
        with pytest.raises(ValueError):
            element_from_json({"r": 2, "s": 0, "pairs": [[1, 2], [-1, -2]]})

    def test_missing_field(self):
        """Test malformed element JSON."""
        with pytest.raises(WalledBrauerError):
            element_from_json({"r": 1, "terms": []})

    def test_load_missing_file(self, tmp_path):
        """Test an unreadable path."""
        with pytest.raises(WalledBrauerError):
            load_element(str(tmp_path / "missing.json"))

    def test_load_bad_json(self, tmp_path):
        """Test a file that is not JSON."""
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(WalledBrauerError):
            load_element(str(path))


class TestReports:
    """Tests for restriction and structure reports."""

    def test_structure_csv(self):
        """Test the header and row layout."""
        shape = SplitShape(r1=1, s1=0, r2=0, s2=1)
        payload = structure_table(
            shape,
            CellLabel(l=0, lam_l=ONE),
            CellLabel(l=0, lam_r=ONE),
            {CellLabel(l=1): 1, CellLabel(l=0, lam_l=ONE, lam_r=ONE): 1},
        )
        assert structure_csv(payload).splitlines() == ["l,lamL,lamR,coeff", "0,1,1,1", "1,0,0,1"]

    def test_restriction_report(self):
        """Test the JSON layout and CSV columns."""
        shape = SplitShape(r1=1, s1=0, r2=0, s2=1)
        term = RestrictionTerm(cell1=CellLabel(l=0, lam_l=ONE), cell2=CellLabel(l=0, lam_r=ONE), multiplicity=1)
        payload = restriction_report(shape, CellLabel(l=1), [term])
        assert payload["shape"] == {"r1": 1, "s1": 0, "r2": 0, "s2": 1}
        assert payload["terms"] == [
            {"cell1": {"l": 0, "lamL": [1], "lamR": []}, "cell2": {"l": 0, "lamL": [], "lamR": [1]}, "mult": 1}
        ]
        assert restriction_csv(payload).splitlines() == ["l1,lamL1,lamR1,l2,lamL2,lamR2,mult", "0,1,0,0,0,1,1"]
