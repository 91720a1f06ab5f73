"""Tests for half diagrams and the partial diagram module."""
import pytest

from walled_brauer.algebra.diagrams import (
    AlgebraElement,
    concat,
    enumerate_basis,
    from_permutations,
    identity,
    validate,
)
from walled_brauer.algebra.half_diagrams import (
    HalfDiagram,
    act,
    compose_perm,
    dim_half,
    enumerate_half,
    make_idempotent,
    make_v0,
    top_half,
)
from walled_brauer.errors import RangeError, SizeMismatch
from walled_brauer.suites.algebra_suites import WORKED_LEFT


@pytest.fixture
def arc_diagram():
    return validate(1, 1, [(1, 2), (-1, -2)])


class TestHalfDiagram:
    """Tests for the half diagram model and enumeration."""

    def test_single_arc(self):
        """Test the unique (1,1,1) half diagram."""
        assert enumerate_half(1, 1, 1) == [HalfDiagram(r=1, s=1, arcs=((1, 2),))]

    @pytest.mark.parametrize("r,s,l", [(2, 1, 1), (3, 5, 2), (2, 2, 2), (4, 4, 0), (3, 3, 1)])
    def test_counts_match_formula(self, r, s, l):
        """Test enumeration against C(r,l) C(s,l) l!."""
        assert len(enumerate_half(r, s, l)) == dim_half(r, s, l)

    def test_dimension_values(self):
        """Test a few dimensions by hand."""
        assert dim_half(2, 1, 1) == 2
        assert dim_half(2, 2, 2) == 2
        assert dim_half(3, 5, 2) == 3 * 10 * 2

    def test_top_half_of_worked_diagram(self):
        """Test cutting a diagram in half."""
        v = top_half(validate(3, 5, WORKED_LEFT))
        assert v == HalfDiagram(r=3, s=5, arcs=((2, 6), (3, 7)))
        assert v in enumerate_half(3, 5, 2)

    def test_free_dots(self):
        """Test free positions on each side."""
        v = HalfDiagram(r=3, s=5, arcs=((2, 6), (3, 7)))
        assert v.free_dots() == ([1], [4, 5, 8])

    def test_range_error(self):
        """Test l above min(r, s)."""
        with pytest.raises(RangeError):
            enumerate_half(2, 1, 2)
        with pytest.raises(RangeError):
            dim_half(1, 1, -1)

    def test_arc_must_cross_wall(self):
        """Test validation of arcs."""
        with pytest.raises(ValueError):
            HalfDiagram(r=2, s=1, arcs=((1, 2),))

    def test_arcs_must_be_disjoint(self):
        """Test two arcs sharing a dot."""
        with pytest.raises(ValueError):
            HalfDiagram(r=2, s=1, arcs=((1, 3), (2, 3)))


class TestAction:
    """Tests for the diagram action on half diagrams."""

    def test_identity_action(self):
        """Test the identity fixes every half diagram."""
        for v in enumerate_half(2, 2, 1):
            result = act(identity(2, 2), v)
            assert result.loops == 0
            assert result.image == v
            assert result.perm == ((0,), (0,))

    def test_arc_on_arc_closes_loop(self, arc_diagram):
        """Test e v = delta v."""
        v = enumerate_half(1, 1, 1)[0]
        result = act(arc_diagram, v)
        assert result.loops == 1
        assert result.image == v
        assert result.perm == ((), ())

    def test_arc_on_empty_is_zero(self, arc_diagram):
        """Test the action vanishes when arcs are created."""
        assert act(arc_diagram, make_v0(1, 1, 0)) is None

    def test_permutation_part(self):
        """Test a transposition swaps the free dots."""
        swap = from_permutations(2, 0, [2, 1], [])
        result = act(swap, HalfDiagram(r=2, s=0))
        assert result.perm_left == (1, 0)
        assert result.perm_right == ()

    def test_size_mismatch(self, arc_diagram):
        """Test acting across algebras."""
        with pytest.raises(SizeMismatch):
            act(arc_diagram, HalfDiagram(r=2, s=1))

    def test_module_law(self):
        """Test act(xy, v) = act(x, act(y, v)) on B_{1,2}."""
        basis = enumerate_basis(1, 2)
        for l in (0, 1):
            for v in enumerate_half(1, 2, l):
                for x in basis:
                    for y in basis:
                        loops, xy = concat(x, y)
                        direct = act(xy, v)
                        inner = act(y, v)
                        outer = act(x, inner.image) if inner is not None else None
                        assert (direct is None) == (outer is None)
                        if direct is None:
                            continue
                        assert direct.image == outer.image
                        assert loops + direct.loops == inner.loops + outer.loops
                        assert direct.perm_left == compose_perm(outer.perm_left, inner.perm_left)
                        assert direct.perm_right == compose_perm(outer.perm_right, inner.perm_right)


class TestIdempotents:
    """Tests for v0 and e_{r,s,l}."""

    def test_v0_positions(self):
        """Test the arcs sit innermost against the wall."""
        assert make_v0(1, 1, 1).arcs == ((1, 2),)
        assert make_v0(2, 2, 1).arcs == ((2, 3),)
        assert make_v0(3, 2, 2).arcs == ((2, 5), (3, 4))
        assert make_v0(2, 3, 0).arcs == ()

    def test_zero_arcs_gives_identity(self):
        """Test e_{r,s,0} is the unit."""
        assert make_idempotent(2, 1, 0) == AlgebraElement.unit(2, 1)

    @pytest.mark.parametrize("r,s,l", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 3, 2)])
    def test_idempotent(self, r, s, l):
        """Test e^2 = e exactly."""
        e = make_idempotent(r, s, l)
        assert e * e == e

    def test_idempotent_fixes_v0(self):
        """Test the loops cancel the prefactor on v0."""
        diagram = next(iter(make_idempotent(2, 2, 1).terms))
        v0 = make_v0(2, 2, 1)
        result = act(diagram, v0)
        assert result.image == v0
        assert result.loops == 1

    def test_range_error(self):
        """Test l above min(r, s)."""
        with pytest.raises(RangeError):
            make_idempotent(1, 2, 2)
