"""
Suites for the combinatorial side: LR coefficients, cell dimensions,
the double-walled filtration and the Grothendieck ring.
"""

import itertools
import logging
from math import comb

from walled_brauer.algebra.diagrams import basis_dimension, enumerate_basis
from walled_brauer.algebra.half_diagrams import dim_half, enumerate_half
from walled_brauer.combinatorics.partitions import (
    induction_product,
    lr_coefficient,
    lr_via_characters,
    partitions_of,
    syt_count,
)
from walled_brauer.representations.branching import (
    act_pair,
    all_shapes,
    arc_tuple_of,
    cell_dimension,
    cells_of,
    count_double_walled,
    double_walled_diagrams,
    enumerate_tuples,
    restriction_terms,
)
from walled_brauer.representations.grothendieck import class_of, simple_classes, structure_constants
from walled_brauer.suites.algebra_suites import sizes_each_up_to
from walled_brauer.suites.base import BaseSuite, SuiteFailure
from walled_brauer.types import EMPTY, CellLabel, GenericDelta, Partition, SplitShape

logger = logging.getLogger(__name__)


class LROracleSuite(BaseSuite):
    """LR coefficients against characters, symmetry and induced dimensions."""

    def get_name(self) -> str:
        return "lr-oracle"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for n in range((6 if self.full else 4) + 1):
            targets = partitions_of(n)
            for a in range(n + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(n - a):
                        induced = 0
                        for nu in targets:
                            c = lr_coefficient(lam, mu, nu)
                            if c != lr_via_characters(lam, mu, nu):
                                raise SuiteFailure(
                                    "lr-characters", lam=lam.parts, mu=mu.parts, nu=nu.parts, lr=c,
                                    characters=lr_via_characters(lam, mu, nu),
                                )
                            if c != lr_coefficient(mu, lam, nu):
                                raise SuiteFailure("lr-symmetry", lam=lam.parts, mu=mu.parts, nu=nu.parts)
                            induced += c * syt_count(nu)
                            checks += 2
                        expected = syt_count(lam) * syt_count(mu) * comb(n, a)
                        if induced != expected:
                            raise SuiteFailure(
                                "induced-dimension", lam=lam.parts, mu=mu.parts, induced=induced, expected=expected
                            )
                        checks += 1
        return checks


class SemisimpleDimensionSuite(BaseSuite):
    """Cell dimensions square-sum to dim B_{r,s}; half-diagram counts match."""

    def get_name(self) -> str:
        return "semisimple-dimension"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for r, s in sizes_each_up_to(4 if self.full else 2):
            total = sum(cell_dimension(r, s, cell) ** 2 for cell in cells_of(r, s))
            if total != basis_dimension(r, s):
                raise SuiteFailure("square-sum", r=r, s=s, cells=total, algebra=basis_dimension(r, s))
            if r + s <= 4 and len(enumerate_basis(r, s)) != total:
                raise SuiteFailure("square-sum-enumerated", r=r, s=s, cells=total)
            for l in range(min(r, s) + 1):
                if len(enumerate_half(r, s, l)) != dim_half(r, s, l):
                    raise SuiteFailure("half-count", r=r, s=s, l=l)
                checks += 1
            checks += 1
        return checks


class RestrictionDimensionSuite(BaseSuite):
    """Restriction preserves dimension; double-walled counts add up."""

    def get_name(self) -> str:
        return "restriction-dimension"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for r, s in sizes_each_up_to(3 if self.full else 2):
            for shape in all_shapes(r, s):
                for cell in cells_of(r, s):
                    restricted = sum(
                        term.multiplicity
                        * cell_dimension(shape.r1, shape.s1, term.cell1)
                        * cell_dimension(shape.r2, shape.s2, term.cell2)
                        for term in restriction_terms(shape, cell)
                    )
                    if restricted != cell_dimension(r, s, cell):
                        raise SuiteFailure("restriction-dimension", shape=shape, cell=cell, restricted=restricted)
                    checks += 1

        for r, s in sizes_each_up_to(4 if self.full else 2):
            for shape in all_shapes(r, s):
                for l in range(min(r, s) + 1):
                    tuples = enumerate_tuples(shape, l)
                    keys = [t.sort_key for t in tuples]
                    if keys != sorted(set(keys)):
                        raise SuiteFailure("tuple-order", shape=shape, l=l, tuples=tuples)
                    counted = sum(count_double_walled(shape, t) for t in tuples)
                    if counted != dim_half(r, s, l):
                        raise SuiteFailure("double-walled-count", shape=shape, l=l, counted=counted)
                    if r + s <= 4:
                        for t in tuples:
                            if len(double_walled_diagrams(shape, t)) != count_double_walled(shape, t):
                                raise SuiteFailure("double-walled-enumeration", shape=shape, tuple=t)
                    checks += 2
        return checks


class FiltrationOrderSuite(BaseSuite):
    """
    The tensor-factor action never moves a double-walled diagram up the
    tuple order: A-C and B-D arcs can only turn into A-D and B-C arcs.
    """

    def get_name(self) -> str:
        return "filtration-order"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        bound = 4 if self.full else 3
        for n in range(bound + 1):
            for r in range(n + 1):
                s = n - r
                for shape in all_shapes(r, s):
                    checks += self._check_shape(shape)
        return checks

    @staticmethod
    def _check_shape(shape: SplitShape) -> int:
        checks = 0
        first = enumerate_basis(shape.r1, shape.s1)
        second = enumerate_basis(shape.r2, shape.s2)
        for l in range(min(shape.r, shape.s) + 1):
            for v in enumerate_half(shape.r, shape.s, l):
                before = arc_tuple_of(shape, v)
                for d1, d2 in itertools.product(first, second):
                    result = act_pair(d1, d2, v)
                    if result is None:
                        continue
                    after = arc_tuple_of(shape, result.image)
                    moved_up = (
                        after.t_ac > before.t_ac
                        or after.t_bd > before.t_bd
                        or after.t_ad < before.t_ad
                        or after.t_bc < before.t_bc
                        or after.sort_key > before.sort_key
                    )
                    if moved_up:
                        raise SuiteFailure("filtration-order", shape=shape, d1=d1, d2=d2, v=v, before=before, after=after)
                    checks += 1
        return checks


class RingPropertiesSuite(BaseSuite):
    """Unit, commutativity, associativity and grading of the induction product."""

    def get_name(self) -> str:
        return "ring-properties"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        bound = 3 if self.full else 2
        classes = simple_classes(bound)
        unit = class_of(0, 0, CellLabel(l=0))

        def degree(x):
            (r, s), = x.degrees()
            return r + s

        for x in classes:
            if unit * x != x or x * unit != x:
                raise SuiteFailure("unit", x=repr(x))
            checks += 1

        for x, y in itertools.combinations_with_replacement(classes, 2):
            if degree(x) + degree(y) > bound:
                continue
            xy = x * y
            if xy != y * x:
                raise SuiteFailure("commutativity", x=repr(x), y=repr(y))
            (xr, xs), = x.degrees()
            (yr, ys), = y.degrees()
            if xy.degrees() not in ([], [(xr + yr, xs + ys)]):
                raise SuiteFailure("bigrading", x=repr(x), y=repr(y), degrees=xy.degrees())
            checks += 2

        for x, y, z in itertools.product(classes, repeat=3):
            if degree(x) + degree(y) + degree(z) > bound:
                continue
            if (x * y) * z != x * (y * z):
                raise SuiteFailure("associativity", x=repr(x), y=repr(y), z=repr(z))
            checks += 1

        # s = 0 sector: one LR coefficient per constituent
        for a in range(bound + 2):
            for b in range(bound + 2 - a):
                shape = SplitShape(r1=a, s1=0, r2=b, s2=0)
                for alpha in partitions_of(a):
                    for beta in partitions_of(b):
                        computed = structure_constants(shape, CellLabel(l=0, lam_l=alpha), CellLabel(l=0, lam_l=beta))
                        expected = {
                            CellLabel(l=0, lam_l=Partition(parts=nu), lam_r=EMPTY): c
                            for nu, c in induction_product(alpha, beta).items()
                        }
                        if computed != expected:
                            raise SuiteFailure("symmetric-group-sector", shape=shape, alpha=alpha.parts, beta=beta.parts)
                        checks += 1
        return checks
