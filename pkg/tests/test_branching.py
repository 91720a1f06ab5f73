"""Tests for cell labels, double-walled diagrams and restriction multiplicities."""
import pytest

from walled_brauer.algebra.diagrams import enumerate_basis, identity, validate
from walled_brauer.algebra.half_diagrams import HalfDiagram, dim_half, enumerate_half
from walled_brauer.errors import InfeasibleTuple, RangeError, ShapeMismatch
from walled_brauer.representations.branching import (
    act_pair,
    all_shapes,
    arc_tuple_of,
    cell_dimension,
    cells_of,
    count_double_walled,
    double_walled_diagrams,
    enumerate_tuples,
    restriction_multiplicities,
    restriction_terms,
)
from walled_brauer.types import ArcTuple, CellLabel, Partition, RestrictionTerm, SplitShape

EMPTY = Partition()
ONE = Partition.of(1)


@pytest.fixture
def square_shape():
    return SplitShape(r1=1, s1=1, r2=1, s2=1)


@pytest.fixture
def corner_shape():
    return SplitShape(r1=1, s1=0, r2=0, s2=1)


class TestCells:
    """Tests for cell labels and their dimensions."""

    def test_cells_of_b11(self):
        """Test the two cells of B_{1,1}."""
        assert cells_of(1, 1) == [CellLabel(l=0, lam_l=ONE, lam_r=ONE), CellLabel(l=1)]

    def test_cells_of_b21(self):
        """Test dimensions of the cells of B_{2,1}."""
        dims = [cell_dimension(2, 1, cell) for cell in cells_of(2, 1)]
        assert dims == [1, 1, 2]

    def test_square_sum(self):
        """Test sum of squared cell dimensions is dim B_{r,s}."""
        for r in range(4):
            for s in range(4):
                total = sum(cell_dimension(r, s, cell) ** 2 for cell in cells_of(r, s))
                assert total == len(enumerate_basis(r, s))

    def test_cell_of_wrong_algebra(self):
        """Test a cell that does not belong to B_{r,s}."""
        with pytest.raises(ShapeMismatch):
            cell_dimension(1, 1, CellLabel(l=0, lam_l=Partition.of(2)))


class TestArcTuples:
    """Tests for tuple enumeration and counting."""

    def test_tuple_order(self, square_shape):
        """Test the filtration order for one arc."""
        tuples = [t.as_tuple() for t in enumerate_tuples(square_shape, 1)]
        assert tuples == [(0, 0, 1, 0), (0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 0, 0)]

    def test_infeasible_tuples_skipped(self, corner_shape):
        """Test only capacity-feasible tuples appear."""
        assert enumerate_tuples(corner_shape, 1) == [ArcTuple(t_ac=1)]

    def test_range_error(self, corner_shape):
        """Test l above min(r, s)."""
        with pytest.raises(RangeError):
            enumerate_tuples(corner_shape, 2)

    def test_infeasible_count(self, corner_shape):
        """Test counting an infeasible tuple."""
        with pytest.raises(InfeasibleTuple):
            count_double_walled(corner_shape, ArcTuple(t_bd=1))

    def test_counts_add_up(self):
        """Test sum over tuples equals dim V^l."""
        shape = SplitShape(r1=2, s1=1, r2=1, s2=2)
        for l in range(4):
            assert sum(count_double_walled(shape, t) for t in enumerate_tuples(shape, l)) == dim_half(3, 3, l)

    def test_counts_match_enumeration(self, square_shape):
        """Test the closed form against explicit double-walled diagrams."""
        for l in range(3):
            for t in enumerate_tuples(square_shape, l):
                assert len(double_walled_diagrams(square_shape, t)) == count_double_walled(square_shape, t)

    def test_arc_tuple_blocks(self, square_shape):
        """Test reading arcs in block coordinates."""
        assert arc_tuple_of(square_shape, HalfDiagram(r=2, s=2, arcs=((1, 3),))) == ArcTuple(t_ac=1)
        assert arc_tuple_of(square_shape, HalfDiagram(r=2, s=2, arcs=((1, 4),))) == ArcTuple(t_ad=1)
        assert arc_tuple_of(square_shape, HalfDiagram(r=2, s=2, arcs=((2, 3),))) == ArcTuple(t_bc=1)
        assert arc_tuple_of(square_shape, HalfDiagram(r=2, s=2, arcs=((2, 4),))) == ArcTuple(t_bd=1)

    def test_arc_tuple_shape_mismatch(self, square_shape):
        """Test a half diagram of the wrong size."""
        with pytest.raises(ShapeMismatch):
            arc_tuple_of(square_shape, HalfDiagram(r=1, s=1))


class TestFiltration:
    """Tests for the action of the tensor factors on double-walled diagrams."""

    def test_outer_arc_moves_ac_to_ad(self, square_shape):
        """Test an A-C arc becomes an A-D arc under the outer factor."""
        arc = validate(1, 1, [(1, 2), (-1, -2)])
        v = HalfDiagram(r=2, s=2, arcs=((1, 3),))
        result = act_pair(arc, identity(1, 1), v)
        assert result.image == HalfDiagram(r=2, s=2, arcs=((1, 4),))
        assert result.loops == 0

    def test_tuple_never_moves_up(self, square_shape):
        """Test the action never increases the tuple key."""
        first = enumerate_basis(1, 1)
        for l in range(3):
            for v in enumerate_half(2, 2, l):
                before = arc_tuple_of(square_shape, v)
                for d1 in first:
                    for d2 in first:
                        result = act_pair(d1, d2, v)
                        if result is None:
                            continue
                        after = arc_tuple_of(square_shape, result.image)
                        assert after.t_ac <= before.t_ac
                        assert after.t_bd <= before.t_bd
                        assert after.sort_key <= before.sort_key


class TestRestriction:
    """Tests for restriction multiplicities."""

    def test_two_box_cell(self, corner_shape):
        """Test Res of ((1),(1), l=0) to B_{1,0} x B_{0,1}."""
        cell = CellLabel(l=0, lam_l=ONE, lam_r=ONE)
        assert restriction_terms(corner_shape, cell) == [
            RestrictionTerm(cell1=CellLabel(l=0, lam_l=ONE), cell2=CellLabel(l=0, lam_r=ONE), multiplicity=1)
        ]

    def test_one_arc_cell(self, corner_shape):
        """Test Res of (empty, empty, l=1) to B_{1,0} x B_{0,1}."""
        terms = restriction_multiplicities(corner_shape, CellLabel(l=1))
        assert terms == {(CellLabel(l=0, lam_l=ONE), CellLabel(l=0, lam_r=ONE)): 1}

    def test_symmetric_group_branching(self):
        """Test Res of S^(2,1) to S2 x S1."""
        shape = SplitShape(r1=2, s1=0, r2=1, s2=0)
        terms = restriction_multiplicities(shape, CellLabel(l=0, lam_l=Partition.of(2, 1)))
        assert terms == {
            (CellLabel(l=0, lam_l=Partition.of(2)), CellLabel(l=0, lam_l=ONE)): 1,
            (CellLabel(l=0, lam_l=Partition.of(1, 1)), CellLabel(l=0, lam_l=ONE)): 1,
        }

    def test_dimension_identity(self):
        """Test restriction preserves dimension for every split of B_{2,2}."""
        for shape in all_shapes(2, 2):
            for cell in cells_of(2, 2):
                restricted = sum(
                    term.multiplicity
                    * cell_dimension(shape.r1, shape.s1, term.cell1)
                    * cell_dimension(shape.r2, shape.s2, term.cell2)
                    for term in restriction_terms(shape, cell)
                )
                assert restricted == cell_dimension(2, 2, cell)

    def test_terms_sorted(self):
        """Test terms come in canonical order."""
        shape = SplitShape(r1=1, s1=1, r2=1, s2=1)
        terms = restriction_terms(shape, CellLabel(l=1, lam_l=ONE, lam_r=ONE))
        keys = [(t.cell1.sort_key, t.cell2.sort_key) for t in terms]
        assert keys == sorted(keys)

    def test_wrong_cell(self, corner_shape):
        """Test a cell of another algebra."""
        with pytest.raises(ShapeMismatch):
            restriction_terms(corner_shape, CellLabel(l=0, lam_l=Partition.of(2)))
