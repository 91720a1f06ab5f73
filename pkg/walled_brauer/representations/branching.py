"""
Restriction of cell modules from B_{r,s} to B_{r1,s1} (x) B_{r2,s2}.

A half diagram of B_{r,s} read against a split shape becomes a
double-walled diagram: its arcs join the left blocks A, B to the right
blocks C, D and the counts per block pair form an ArcTuple. Layers of
equal tuple, taken in the declared order, filter the restricted cell
module, and each layer is an induced product of Specht modules. The
multiplicities below expand those products with LR coefficients.
"""

import logging
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Optional, Tuple

from walled_brauer.algebra.diagrams import WalledDiagram
from walled_brauer.algebra.half_diagrams import HalfAction, HalfDiagram, act, dim_half, enumerate_half
from walled_brauer.algebra.tensor import twist
from walled_brauer.combinatorics.partitions import (
    induction_product,
    partitions_of,
    restriction_pairs,
    syt_count,
)
from walled_brauer.errors import RangeError, ShapeMismatch
from walled_brauer.types import ArcTuple, CellLabel, Partition, RestrictionTerm, SplitShape

logger = logging.getLogger(__name__)


def cells_of(r: int, s: int) -> List[CellLabel]:
    """Cell labels of B_{r,s}, by arc count then partitions_of order."""
    cells = []
    for l in range(min(r, s) + 1):
        for lam_l in partitions_of(r - l):
            for lam_r in partitions_of(s - l):
                cells.append(CellLabel(l=l, lam_l=lam_l, lam_r=lam_r))
    return cells


def cell_dimension(r: int, s: int, cell: CellLabel) -> int:
    cell.require(r, s)
    return dim_half(r, s, cell.l) * syt_count(cell.lam_l) * syt_count(cell.lam_r)


def enumerate_tuples(shape: SplitShape, l: int) -> List[ArcTuple]:
    """
    Capacity-feasible arc tuples summing to l, in filtration order.

    Raises:
        RangeError: If l is outside 0..min(r, s).
    """
    if l < 0 or l > min(shape.r, shape.s):
        raise RangeError(f"Arc count l={l} is outside 0..{min(shape.r, shape.s)} for shape {shape}")
    tuples = []
    for t_ac in range(l + 1):
        for t_bd in range(l - t_ac + 1):
            for t_ad in range(l - t_ac - t_bd + 1):
                t = ArcTuple(t_ac=t_ac, t_bd=t_bd, t_ad=t_ad, t_bc=l - t_ac - t_bd - t_ad)
                if t.is_feasible(shape):
                    tuples.append(t)
    return sorted(tuples, key=lambda t: t.sort_key)


def count_double_walled(shape: SplitShape, t: ArcTuple) -> int:
    """Number of double-walled diagrams with arc tuple t."""
    t.require_feasible(shape)
    r1, s1, r2, s2 = shape.r1, shape.s1, shape.r2, shape.s2
    return (
        comb(r1, t.t_ad) * comb(r1 - t.t_ad, t.t_ac)
        * comb(s1, t.t_ad) * comb(s1 - t.t_ad, t.t_bd)
        * comb(r2, t.t_bc) * comb(r2 - t.t_bc, t.t_bd)
        * comb(s2, t.t_bc) * comb(s2 - t.t_bc, t.t_ac)
        * factorial(t.t_ad) * factorial(t.t_bc) * factorial(t.t_ac) * factorial(t.t_bd)
    )


def arc_tuple_of(shape: SplitShape, v: HalfDiagram) -> ArcTuple:
    """Read a half diagram of B_{r,s} as a double-walled diagram."""
    if (v.r, v.s) != (shape.r, shape.s):
        raise ShapeMismatch(f"({v.r},{v.s}) half diagram does not fit shape {shape}")
    counts = {"AC": 0, "BD": 0, "AD": 0, "BC": 0}
    for i, j in v.arcs:
        counts[shape.block_of(i) + shape.block_of(j)] += 1
    return ArcTuple(t_ac=counts["AC"], t_bd=counts["BD"], t_ad=counts["AD"], t_bc=counts["BC"])


def double_walled_diagrams(shape: SplitShape, t: ArcTuple) -> List[HalfDiagram]:
    t.require_feasible(shape)
    return [v for v in enumerate_half(shape.r, shape.s, t.total) if arc_tuple_of(shape, v) == t]


def act_pair(d1: WalledDiagram, d2: WalledDiagram, v: HalfDiagram) -> Optional[HalfAction]:
    """Action of d1 (x) d2 on v through the twisted tensor embedding."""
    return act(twist(d1, d2), v)


def _check_cell(shape: SplitShape, cell: CellLabel) -> None:
    if not cell.belongs_to(shape.r, shape.s):
        raise ShapeMismatch(f"Cell {cell.to_text()} is not a cell of B_{{{shape.r},{shape.s}}} for shape {shape}")


@lru_cache(maxsize=4096)
def _restriction(shape: SplitShape, cell: CellLabel) -> Tuple[RestrictionTerm, ...]:
    totals: Dict[Tuple[CellLabel, CellLabel], int] = {}
    for t in enumerate_tuples(shape, cell.l):
        left_split = restriction_pairs(cell.lam_l, shape.r1 - t.t_ad - t.t_ac)
        # first factor of lamR sits on block C, the second on block D
        right_split = restriction_pairs(cell.lam_r, shape.s2 - t.t_bc - t.t_ac)
        for (lam1_l, lam2_l), c_left in left_split.items():
            for (lam1_r, lam2_r), c_right in right_split.items():
                for mu1 in partitions_of(t.t_ac):
                    for mu2 in partitions_of(t.t_bd):
                        weight = c_left * c_right
                        for nu1_l, a in induction_product(lam1_l, mu1.parts).items():
                            for nu1_r, b in induction_product(lam2_r, mu2.parts).items():
                                cell1 = CellLabel(l=t.t_ad, lam_l=Partition(parts=nu1_l), lam_r=Partition(parts=nu1_r))
                                for nu2_l, c in induction_product(lam2_l, mu2.parts).items():
                                    for nu2_r, d in induction_product(lam1_r, mu1.parts).items():
                                        cell2 = CellLabel(
                                            l=t.t_bc, lam_l=Partition(parts=nu2_l), lam_r=Partition(parts=nu2_r)
                                        )
                                        key = (cell1, cell2)
                                        totals[key] = totals.get(key, 0) + weight * a * b * c * d
    terms = [
        RestrictionTerm(cell1=c1, cell2=c2, multiplicity=m) for (c1, c2), m in totals.items() if m
    ]
    terms.sort(key=lambda term: (term.cell1.sort_key, term.cell2.sort_key))
    logger.debug(f"Restriction of {cell.to_text()} to {shape}: {len(terms)} terms")
    return tuple(terms)


def restriction_terms(shape: SplitShape, cell: CellLabel) -> List[RestrictionTerm]:
    """
    Constituents of Res Δ_{r,s}(cell) as Δ(cell1) (x) Δ(cell2) with multiplicities.

    Raises:
        ShapeMismatch: If the cell does not belong to B_{r1+r2, s1+s2}.
    """
    _check_cell(shape, cell)
    return list(_restriction(shape, cell))


def restriction_multiplicities(shape: SplitShape, cell: CellLabel) -> Dict[Tuple[CellLabel, CellLabel], int]:
    return {(t.cell1, t.cell2): t.multiplicity for t in restriction_terms(shape, cell)}


def all_shapes(r: int, s: int) -> List[SplitShape]:
    """Every split of (r, s) into two factors."""
    return [
        SplitShape(r1=r1, s1=s1, r2=r - r1, s2=s - s1)
        for r1 in range(r + 1)
        for s1 in range(s + 1)
    ]
