"""Tests for the exact matrix models."""
from fractions import Fraction

import pytest

from walled_brauer.config import override_settings
from walled_brauer.errors import BasisMismatch, SizeExceeded, SizeMismatch
from walled_brauer.representations.branching import cells_of, restriction_multiplicities
from walled_brauer.representations.oracle import (
    brute_restriction,
    cell_module_matrices,
    character,
    check_product_law,
    hom_space_dim,
    specht_matrices,
    specht_pair_rep,
)
from walled_brauer.types import CellLabel, Partition, SplitShape

ONE = Partition.of(1)


@pytest.fixture(autouse=True)
def default_settings():
    override_settings()
    yield
    override_settings()


class TestSpecht:
    """Tests for Young's seminormal form."""

    @pytest.mark.parametrize("n,lam", [(3, (2, 1)), (4, (2, 2)), (4, (3, 1)), (3, (1, 1, 1))])
    def test_product_law(self, n, lam):
        """Test the matrices multiply like the permutations."""
        assert check_product_law(specht_matrices(n, lam)) is None

    def test_dimension(self):
        """Test the dimension is the tableau count."""
        assert specht_matrices(4, (3, 1)).dimension == 3

    def test_identity_character(self):
        """Test the character at the identity."""
        rep = specht_matrices(3, (2, 1))
        assert character(rep, (0, 1, 2)) == 2
        assert character(rep, (1, 2, 0)) == -1

    def test_size_mismatch(self):
        """Test lam must partition n."""
        with pytest.raises(SizeMismatch):
            specht_matrices(3, (2,))

    def test_size_bound(self):
        """Test the Specht bound."""
        override_settings(specht_max_size=3)
        with pytest.raises(SizeExceeded):
            specht_matrices(4, (4,))

    def test_pair_rep(self):
        """Test the outer tensor product of two Specht modules."""
        rep = specht_pair_rep((2, 1), (1,))
        assert rep.dimension == 2
        assert check_product_law(rep) is None


class TestCellModules:
    """Tests for cell module matrices."""

    def test_product_law(self):
        """Test every cell of B_{2,1} is a representation."""
        for cell in cells_of(2, 1):
            assert check_product_law(cell_module_matrices(2, 1, cell)) is None

    def test_arc_acts_by_delta(self):
        """Test e acts by delta0 on the one-arc cell of B_{1,1}."""
        rep = cell_module_matrices(1, 1, CellLabel(l=1), "22/7")
        assert rep.dimension == 1
        assert set(character(rep, key) for key in rep.keys()) == {Fraction(1), Fraction(22, 7)}

    def test_hom_spaces(self):
        """Test Schur's lemma on the two cells of B_{1,1}."""
        arc = cell_module_matrices(1, 1, CellLabel(l=1))
        boxes = cell_module_matrices(1, 1, CellLabel(l=0, lam_l=ONE, lam_r=ONE))
        assert hom_space_dim(arc, arc) == 1
        assert hom_space_dim(boxes, boxes) == 1
        assert hom_space_dim(arc, boxes) == 0

    def test_basis_mismatch(self):
        """Test representations of different algebras."""
        with pytest.raises(BasisMismatch):
            hom_space_dim(cell_module_matrices(1, 1, CellLabel(l=1)), specht_matrices(2, (2,)))

    def test_oracle_bound(self):
        """Test r + s above the oracle bound."""
        with pytest.raises(SizeExceeded):
            cell_module_matrices(3, 2, CellLabel(l=0, lam_l=Partition.of(3), lam_r=Partition.of(2)))

    def test_small_integer_delta_rejected(self):
        """Test a degenerate stand-in value."""
        with pytest.raises(ValueError):
            cell_module_matrices(1, 1, CellLabel(l=1), 1)


class TestBruteRestriction:
    """Tests for restriction read off from intertwiners."""

    def test_corner_shape(self):
        """Test Res of ((1),(1), l=0) to B_{1,0} x B_{0,1}."""
        shape = SplitShape(r1=1, s1=0, r2=0, s2=1)
        result = brute_restriction(shape, CellLabel(l=0, lam_l=ONE, lam_r=ONE))
        assert result == {(CellLabel(l=0, lam_l=ONE), CellLabel(l=0, lam_r=ONE)): 1}

    def test_matches_formula(self):
        """Test the matrix model against the LR formula on B_{2,1}."""
        shape = SplitShape(r1=1, s1=1, r2=1, s2=0)
        for cell in cells_of(2, 1):
            assert brute_restriction(shape, cell) == restriction_multiplicities(shape, cell)

    def test_bound(self):
        """Test the oracle bound applies to the whole shape."""
        override_settings(oracle_max_size=2)
        with pytest.raises(SizeExceeded):
            brute_restriction(SplitShape(r1=1, s1=1, r2=1, s2=0), CellLabel(l=1, lam_l=ONE))
