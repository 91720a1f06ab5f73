"""
The bigraded Grothendieck ring of the walled Brauer tower.

Classes are integer combinations of cell modules Δ_{r,s}(cell). In the
semisimple setting the product of [Δ(nu1)] and [Δ(nu2)] is the class of
the module induced along the twisted tensor embedding; its coefficients
are computed here directly from the LR data of the two factors, without
going through the restriction multiplicities.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from walled_brauer.combinatorics.partitions import induction_product, lr_coefficient, partitions_of
from walled_brauer.errors import ShapeMismatch
from walled_brauer.representations.branching import cell_dimension, cells_of
from walled_brauer.types import CellLabel, Partition, SplitShape

logger = logging.getLogger(__name__)

GradedCell = Tuple[int, int, CellLabel]


class GrothClass:
    """Sparse integer combination of graded cell classes."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[GradedCell, int]] = None):
        cleaned = {}
        for (r, s, cell), coeff in (terms or {}).items():
            cell.require(r, s)
            if coeff:
                cleaned[(r, s, cell)] = int(coeff)
        self._terms = cleaned

    @property
    def terms(self) -> Dict[GradedCell, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[GradedCell, int]]:
        for key in sorted(self._terms, key=lambda k: (k[0], k[1], k[2].sort_key)):
            yield key, self._terms[key]

    def degrees(self) -> List[Tuple[int, int]]:
        return sorted({(r, s) for r, s, _ in self._terms})

    def dimension(self) -> int:
        """Total dimension of the (virtual) module."""
        return sum(coeff * cell_dimension(r, s, cell) for (r, s, cell), coeff in self._terms.items())

    def __add__(self, other: "GrothClass") -> "GrothClass":
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return GrothClass(merged)

    def __neg__(self) -> "GrothClass":
        return GrothClass({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "GrothClass") -> "GrothClass":
        return self + (-other)

    def scale(self, factor: int) -> "GrothClass":
        return GrothClass({key: c * factor for key, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, GrothClass):
            return ring_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrothClass):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "GrothClass(0)"
        body = " + ".join(f"{c}·Δ_{{{r},{s}}}{cell}" for (r, s, cell), c in self.items())
        return f"GrothClass({body})"


def class_of(r: int, s: int, cell: CellLabel) -> GrothClass:
    """
    The class [Δ_{r,s}(cell)].

    Raises:
        ShapeMismatch: If the cell is not a cell of B_{r,s}.
    """
    cell.require(r, s)
    return GrothClass({(r, s, cell): 1})


@lru_cache(maxsize=8192)
def _structure(shape: SplitShape, nu1: CellLabel, nu2: CellLabel) -> Tuple[Tuple[CellLabel, int], ...]:
    r1, s1, r2, s2 = shape.r1, shape.s1, shape.r2, shape.s2
    t_ad, t_bc = nu1.l, nu2.l
    result: Dict[CellLabel, int] = {}
    for t_ac in range(min(r1 - t_ad, s2 - t_bc) + 1):
        for t_bd in range(min(r2 - t_bc, s1 - t_ad) + 1):
            l = t_ac + t_bd + t_ad + t_bc
            for mu1 in partitions_of(t_ac):
                for mu2 in partitions_of(t_bd):
                    _accumulate(shape, nu1, nu2, t_ac, t_bd, l, mu1, mu2, result)
    return tuple(sorted(((cell, c) for cell, c in result.items() if c), key=lambda item: item[0].sort_key))


def _accumulate(
    shape: SplitShape,
    nu1: CellLabel,
    nu2: CellLabel,
    t_ac: int,
    t_bd: int,
    l: int,
    mu1: Partition,
    mu2: Partition,
    result: Dict[CellLabel, int],
) -> None:
    t_ad, t_bc = nu1.l, nu2.l
    for lam1_l in partitions_of(shape.r1 - t_ad - t_ac):
        a = lr_coefficient(lam1_l, mu1, nu1.lam_l)
        if not a:
            continue
        for lam2_r in partitions_of(shape.s1 - t_ad - t_bd):
            b = lr_coefficient(lam2_r, mu2, nu1.lam_r)
            if not b:
                continue
            for lam2_l in partitions_of(shape.r2 - t_bc - t_bd):
                c = lr_coefficient(lam2_l, mu2, nu2.lam_l)
                if not c:
                    continue
                for lam1_r in partitions_of(shape.s2 - t_bc - t_ac):
                    d = lr_coefficient(lam1_r, mu1, nu2.lam_r)
                    if not d:
                        continue
                    weight = a * b * c * d
                    for lam_l, e in induction_product(lam1_l, lam2_l).items():
                        for lam_r, f in induction_product(lam1_r, lam2_r).items():
                            cell = CellLabel(l=l, lam_l=Partition(parts=lam_l), lam_r=Partition(parts=lam_r))
                            result[cell] = result.get(cell, 0) + weight * e * f


def structure_constants(shape: SplitShape, nu1: CellLabel, nu2: CellLabel) -> Dict[CellLabel, int]:
    """
    Coefficients of [Δ_{r,s}(lam)] in [Δ_{r1,s1}(nu1)] · [Δ_{r2,s2}(nu2)].

    Raises:
        ShapeMismatch: If nu1 or nu2 does not fit its factor of the shape.
    """
    if not nu1.belongs_to(shape.r1, shape.s1):
        raise ShapeMismatch(f"Cell {nu1.to_text()} is not a cell of B_{{{shape.r1},{shape.s1}}}")
    if not nu2.belongs_to(shape.r2, shape.s2):
        raise ShapeMismatch(f"Cell {nu2.to_text()} is not a cell of B_{{{shape.r2},{shape.s2}}}")
    return dict(_structure(shape, nu1, nu2))


def ring_multiply(x: GrothClass, y: GrothClass) -> GrothClass:
    """Induction product, extended bilinearly over all graded pieces."""
    product: Dict[GradedCell, int] = {}
    for (r1, s1, nu1), a in x.items():
        for (r2, s2, nu2), b in y.items():
            shape = SplitShape(r1=r1, s1=s1, r2=r2, s2=s2)
            for cell, c in _structure(shape, nu1, nu2):
                key = (r1 + r2, s1 + s2, cell)
                product[key] = product.get(key, 0) + a * b * c
    return GrothClass(product)


def simple_classes(max_total: int) -> List[GrothClass]:
    """Classes of all cell modules with r + s <= max_total."""
    classes = []
    for total in range(max_total + 1):
        for r in range(total + 1):
            for cell in cells_of(r, total - r):
                classes.append(class_of(r, total - r, cell))
    return classes
