"""Tests for partition combinatorics and LR coefficients."""
import pytest
from math import comb

from walled_brauer.combinatorics.partitions import (
    centralizer_order,
    conjugate,
    hook_lengths,
    induction_product,
    lr_coefficient,
    lr_via_characters,
    mn_character,
    partitions_of,
    restriction_pairs,
    standard_tableaux,
    syt_count,
)
from walled_brauer.errors import SizeMismatch
from walled_brauer.types import Partition


class TestPartitions:
    """Tests for enumeration and shape statistics."""

    def test_partitions_of_four(self):
        """Test order and count for n = 4."""
        assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_partitions_of_zero(self):
        """Test the empty partition."""
        assert partitions_of(0) == [Partition()]

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 3), (5, 7), (6, 11)])
    def test_partition_counts(self, n, count):
        """Test partition numbers."""
        assert len(partitions_of(n)) == count

    def test_conjugate(self):
        """Test transposing a diagram."""
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(Partition.of(2, 2)) == (2, 2)

    def test_hook_lengths(self):
        """Test hooks of (2,1)."""
        assert hook_lengths((2, 1)) == [[3, 1], [1]]

    @pytest.mark.parametrize("shape,count", [((), 1), ((2, 1), 2), ((3, 2, 1), 16), ((2, 2), 2), ((4, 1), 4)])
    def test_syt_count(self, shape, count):
        """Test the hook length formula."""
        assert syt_count(shape) == count

    def test_standard_tableaux(self):
        """Test the two tableaux of shape (2,1)."""
        assert standard_tableaux((2, 1)) == [((1, 2), (3,)), ((1, 3), (2,))]

    def test_tableaux_count_matches_hook_formula(self):
        """Test enumeration against the hook length formula."""
        for lam in partitions_of(5):
            assert len(standard_tableaux(lam)) == syt_count(lam)


class TestLittlewoodRichardson:
    """Tests for LR coefficients."""

    def test_pieri(self):
        """Test adding one box."""
        assert lr_coefficient((2,), (1,), (2, 1)) == 1
        assert lr_coefficient((2,), (1,), (3,)) == 1
        assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0

    def test_multiplicity_two(self):
        """Test the classic coefficient 2."""
        assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2

    def test_grading(self):
        """Test sizes must add up."""
        assert lr_coefficient((1,), (1,), (3,)) == 0

    def test_empty_factor(self):
        """Test the empty partition is a unit."""
        assert lr_coefficient((), (2, 1), (2, 1)) == 1
        assert lr_coefficient((2, 1), (), (2, 1)) == 1

    def test_symmetry(self):
        """Test lr(lam, mu, nu) = lr(mu, lam, nu)."""
        for nu in partitions_of(5):
            for lam in partitions_of(2):
                for mu in partitions_of(3):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)

    def test_character_oracle(self):
        """Test agreement with the character inner product up to |nu| = 5."""
        for n in range(6):
            for a in range(n + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(n - a):
                        for nu in partitions_of(n):
                            assert lr_coefficient(lam, mu, nu) == lr_via_characters(lam, mu, nu)

    def test_character_oracle_value(self):
        """Test a single character computation."""
        assert lr_via_characters((2,), (1,), (2, 1)) == 1

    def test_induced_dimension(self):
        """Test sum over nu of lr f^nu = f^lam f^mu C(n, a)."""
        lam, mu = Partition.of(2, 1), Partition.of(2)
        total = sum(c * syt_count(nu) for nu, c in induction_product(lam, mu).items())
        assert total == syt_count(lam) * syt_count(mu) * comb(5, 3)

    def test_induction_product(self):
        """Test (1) times (1)."""
        assert induction_product((1,), (1,)) == {(2,): 1, (1, 1): 1}

    def test_restriction_pairs(self):
        """Test splitting (2,1) into one box and two boxes."""
        assert restriction_pairs((2, 1), 1) == {((1,), (2,)): 1, ((1,), (1, 1)): 1}


class TestCharacters:
    """Tests for Murnaghan-Nakayama characters."""

    def test_character_table_of_s3(self):
        """Test the standard representation of S3."""
        assert mn_character((2, 1), (1, 1, 1)) == 2
        assert mn_character((2, 1), (2, 1)) == 0
        assert mn_character((2, 1), (3,)) == -1

    def test_sign_character(self):
        """Test the sign on a transposition."""
        assert mn_character((1, 1, 1), (2, 1)) == -1

    def test_degree_is_tableau_count(self):
        """Test chi at the identity is f^lam."""
        for lam in partitions_of(5):
            assert mn_character(lam, (1,) * 5) == syt_count(lam)

    def test_size_mismatch(self):
        """Test shapes of different sizes."""
        with pytest.raises(SizeMismatch):
            mn_character((2,), (1,))

    def test_centralizer_order(self):
        """Test z of cycle type (2,1,1)."""
        assert centralizer_order((2, 1, 1)) == 4
        assert centralizer_order((3,)) == 3
