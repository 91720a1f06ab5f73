"""
Matrix-model cross-checks. These depend on the numeric delta0, so a
failure is retried with fresh values before it is reported.
"""

import logging
from fractions import Fraction

import numpy as np

from walled_brauer.combinatorics.partitions import partitions_of
from walled_brauer.config import get_settings
from walled_brauer.representations.branching import all_shapes, cells_of, restriction_multiplicities
from walled_brauer.representations.grothendieck import structure_constants
from walled_brauer.representations.oracle import (
    brute_restriction,
    cell_module_matrices,
    check_product_law,
    hom_space_dim,
    specht_matrices,
    specht_pair_rep,
)
from walled_brauer.suites.algebra_suites import sizes_each_up_to, sizes_up_to
from walled_brauer.suites.base import BaseSuite, SuiteFailure
from walled_brauer.types import CellLabel, GenericDelta

logger = logging.getLogger(__name__)

PROP_CASES_QUICK = [(1, 1, 1), (2, 1, 1)]
PROP_CASES_FULL = PROP_CASES_QUICK + [(2, 2, 1)]


def _unitriangular(n: int):
    """All-ones upper triangular matrix and its inverse."""
    change = np.empty((n, n), dtype=object)
    inverse = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            change[i, j] = Fraction(int(j >= i))
            inverse[i, j] = Fraction(1 if i == j else -1 if j == i + 1 else 0)
    return change, inverse


class StructureConstantSuite(BaseSuite):
    """Ring structure constants, restriction multiplicities and intertwiner ranks agree."""

    uses_delta = True

    def get_name(self) -> str:
        return "structure-constants"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for r, s in sizes_each_up_to(3 if self.full else 2):
            for shape in all_shapes(r, s):
                first, second = cells_of(shape.r1, shape.s1), cells_of(shape.r2, shape.s2)
                for cell in cells_of(r, s):
                    table = restriction_multiplicities(shape, cell)
                    for nu1 in first:
                        for nu2 in second:
                            coeff = structure_constants(shape, nu1, nu2).get(cell, 0)
                            if coeff != table.get((nu1, nu2), 0):
                                raise SuiteFailure(
                                    "frobenius-reciprocity", shape=shape, cell=cell, nu1=nu1, nu2=nu2,
                                    structure=coeff, restriction=table.get((nu1, nu2), 0),
                                )
                            checks += 1

        bound = min(4 if self.full else 2, get_settings().oracle_max_size)
        for r, s in sizes_up_to(bound):
            for shape in all_shapes(r, s):
                for cell in cells_of(r, s):
                    brute = brute_restriction(shape, cell, delta0)
                    if brute != restriction_multiplicities(shape, cell):
                        raise SuiteFailure(
                            "brute-restriction", shape=shape, cell=cell,
                            brute=[[c1, c2, m] for (c1, c2), m in brute.items()],
                        )
                    checks += 1
        logger.debug(f"structure-constants: oracle bound r+s <= {bound} at δ0={delta0}")
        return checks


class HomSpaceSuite(BaseSuite):
    """Product laws of the matrix models and the partial-module Hom identity."""

    uses_delta = True

    def get_name(self) -> str:
        return "hom-spaces"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        settings = get_settings()

        for n in range(min(4 if self.full else 3, settings.specht_max_size) + 1):
            for lam in partitions_of(n):
                failure = check_product_law(specht_matrices(n, lam))
                if failure is not None:
                    raise SuiteFailure("specht-product-law", lam=lam.parts, a=failure[0], b=failure[1])
                checks += 1

        for r, s in sizes_up_to(min(4 if self.full else 2, settings.oracle_max_size)):
            for cell in cells_of(r, s):
                failure = check_product_law(cell_module_matrices(r, s, cell, delta0), delta0)
                if failure is not None:
                    raise SuiteFailure("cell-product-law", r=r, s=s, cell=cell, a=failure[0], b=failure[1])
                checks += 1

        for r, s, l in PROP_CASES_FULL if self.full else PROP_CASES_QUICK:
            for left_m in partitions_of(r - l):
                for right_m in partitions_of(s - l):
                    for left_n in partitions_of(r - l):
                        for right_n in partitions_of(s - l):
                            m_cell = CellLabel(l=l, lam_l=left_m, lam_r=right_m)
                            n_cell = CellLabel(l=l, lam_l=left_n, lam_r=right_n)
                            algebra_side = hom_space_dim(
                                cell_module_matrices(r, s, m_cell, delta0), cell_module_matrices(r, s, n_cell, delta0)
                            )
                            group_side = hom_space_dim(
                                specht_pair_rep(left_m, right_m), specht_pair_rep(left_n, right_n)
                            )
                            if algebra_side != group_side:
                                raise SuiteFailure(
                                    "partial-module-hom", r=r, s=s, l=l, m=m_cell, n=n_cell,
                                    algebra=algebra_side, group=group_side,
                                )
                            checks += 1

        for r, s in sizes_up_to(2):
            for cell in cells_of(r, s):
                rep = cell_module_matrices(r, s, cell, delta0)
                change, inverse = _unitriangular(rep.dimension)
                if hom_space_dim(rep.conjugate(change, inverse), rep) != hom_space_dim(rep, rep):
                    raise SuiteFailure("hom-conjugation", r=r, s=s, cell=cell)
                checks += 1
        return checks
