"""
Brute-force matrix models used to cross-check the combinatorial formulas.

Everything here is exact: matrices are numpy object arrays of Fraction,
ranks come from sympy's DomainMatrix over QQ. Cell modules are built at a
numeric stand-in delta0 for the loop parameter; multiplicities are then
read off as dimensions of intertwiner spaces.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Hashable, List, Optional, Tuple, Union

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from walled_brauer.algebra.diagrams import WalledDiagram, concat, enumerate_basis
from walled_brauer.algebra.half_diagrams import act, enumerate_half
from walled_brauer.algebra.tensor import twist
from walled_brauer.combinatorics.partitions import PartitionLike, as_parts, standard_tableaux
from walled_brauer.config import get_settings
from walled_brauer.errors import BasisMismatch, SizeExceeded, SizeMismatch
from walled_brauer.representations.branching import cells_of
from walled_brauer.types import CellLabel, GenericDelta, SplitShape

logger = logging.getLogger(__name__)

DeltaLike = Union[GenericDelta, Fraction, int, str]


def _identity(n: int) -> np.ndarray:
    m = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            m[i, j] = Fraction(int(i == j))
    return m


def _zeros(rows: int, cols: int) -> np.ndarray:
    m = np.empty((rows, cols), dtype=object)
    m.fill(Fraction(0))
    return m


def _delta_value(delta0: Optional[DeltaLike]) -> Fraction:
    if delta0 is None:
        return GenericDelta(value=get_settings().delta0).value
    if isinstance(delta0, GenericDelta):
        return delta0.value
    return GenericDelta(value=delta0).value


class MatrixRep:
    """Matrices of a representation, keyed by the basis elements of its algebra."""

    def __init__(self, dimension: int, images: Dict[Hashable, np.ndarray]):
        self.dimension = dimension
        self.images = images

    def image(self, key: Hashable) -> np.ndarray:
        return self.images[key]

    def keys(self) -> List[Hashable]:
        return list(self.images)

    def conjugate(self, change: np.ndarray, inverse: np.ndarray) -> "MatrixRep":
        """The same representation written in another basis."""
        return MatrixRep(self.dimension, {k: change @ m @ inverse for k, m in self.images.items()})

    def __repr__(self) -> str:
        return f"MatrixRep(dim={self.dimension}, keys={len(self.images)})"


# --- symmetric groups -------------------------------------------------------


def _generator(tableaux: List[Tuple[Tuple[int, ...], ...]], i: int) -> np.ndarray:
    """Seminormal matrix of the transposition of entries i+1 and i+2."""
    index = {t: k for k, t in enumerate(tableaux)}
    positions = []
    for t in tableaux:
        where = {}
        for row, entries in enumerate(t):
            for col, entry in enumerate(entries):
                where[entry] = (row, col)
        positions.append(where)

    m = _zeros(len(tableaux), len(tableaux))
    a, b = i + 1, i + 2
    for k, t in enumerate(tableaux):
        (ra, ca), (rb, cb) = positions[k][a], positions[k][b]
        if ra == rb:
            m[k, k] = Fraction(1)
            continue
        if ca == cb:
            m[k, k] = Fraction(-1)
            continue
        axial = (cb - rb) - (ca - ra)
        swapped = tuple(tuple(b if e == a else a if e == b else e for e in row) for row in t)
        other = index[swapped]
        m[k, k] = Fraction(1, axial)
        if rb > ra:
            m[other, k] = Fraction(1)
        else:
            m[other, k] = 1 - Fraction(1, axial * axial)
    return m


@lru_cache(maxsize=64)
def _specht(parts: Tuple[int, ...]) -> MatrixRep:
    n = sum(parts)
    tableaux = standard_tableaux(parts)
    generators = [_generator(tableaux, i) for i in range(n - 1)]
    images: Dict[Tuple[int, ...], np.ndarray] = {tuple(range(n)): _identity(len(tableaux))}

    def image(perm: Tuple[int, ...]) -> np.ndarray:
        if perm in images:
            return images[perm]
        for i in range(n - 1):
            if perm[i] > perm[i + 1]:
                shorter = perm[:i] + (perm[i + 1], perm[i]) + perm[i + 2:]
                images[perm] = image(shorter) @ generators[i]
                return images[perm]
        raise AssertionError(f"{perm} has no descent but is not the identity")

    for perm in itertools.permutations(range(n)):
        image(perm)
    return MatrixRep(len(tableaux), images)


def specht_matrices(n: int, lam: PartitionLike) -> MatrixRep:
    """
    Young's seminormal form of S^lam, keyed by permutations of 0..n-1.

    A permutation w sends i to w[i]; products compose as functions.

    Raises:
        SizeExceeded: If n exceeds the Specht bound.
        SizeMismatch: If lam is not a partition of n.
    """
    bound = get_settings().specht_max_size
    if n > bound:
        raise SizeExceeded(f"Specht matrices are limited to n <= {bound}, got {n}")
    parts = as_parts(lam)
    if sum(parts) != n:
        raise SizeMismatch(f"{parts} is not a partition of {n}")
    return _specht(parts)


# --- walled Brauer cell modules ---------------------------------------------


def _check_oracle_size(r: int, s: int) -> None:
    bound = get_settings().oracle_max_size
    if r + s > bound:
        raise SizeExceeded(f"Matrix models are limited to r+s <= {bound}, got B_{{{r},{s}}}")


@lru_cache(maxsize=256)
def _cell_module(r: int, s: int, cell: CellLabel, delta0: Fraction) -> MatrixRep:
    halves = enumerate_half(r, s, cell.l)
    position = {v: k for k, v in enumerate(halves)}
    left = specht_matrices(r - cell.l, cell.lam_l)
    right = specht_matrices(s - cell.l, cell.lam_r)
    block = left.dimension * right.dimension
    dimension = len(halves) * block

    images = {}
    for x in enumerate_basis(r, s):
        m = _zeros(dimension, dimension)
        for source, v in enumerate(halves):
            result = act(x, v)
            if result is None:
                continue
            target = position[result.image]
            scale = delta0 ** result.loops
            piece = np.kron(left.image(result.perm_left), right.image(result.perm_right)) * scale
            m[target * block:(target + 1) * block, source * block:(source + 1) * block] = piece
        images[x] = m
    logger.debug(f"Built cell module {cell.to_text()} of B_{{{r},{s}}}: dim {dimension}")
    return MatrixRep(dimension, images)


def cell_module_matrices(r: int, s: int, cell: CellLabel, delta0: Optional[DeltaLike] = None) -> MatrixRep:
    """
    Matrices of Δ_{r,s}(cell) on the basis (half diagram, tableau pair).

    Raises:
        SizeExceeded: If r+s exceeds the oracle bound.
        ShapeMismatch: If the cell is not a cell of B_{r,s}.
    """
    _check_oracle_size(r, s)
    cell.require(r, s)
    return _cell_module(r, s, cell, _delta_value(delta0))


def tensor_rep(rep_a: MatrixRep, rep_b: MatrixRep) -> MatrixRep:
    """Outer tensor product, keyed by pairs of basis elements."""
    images = {(ka, kb): np.kron(ma, mb) for ka, ma in rep_a.images.items() for kb, mb in rep_b.images.items()}
    return MatrixRep(rep_a.dimension * rep_b.dimension, images)


def restricted_rep(rep: MatrixRep, shape: SplitShape) -> MatrixRep:
    """Restriction along the twisted tensor embedding, keyed by basis pairs."""
    images = {}
    for d1 in enumerate_basis(shape.r1, shape.s1):
        for d2 in enumerate_basis(shape.r2, shape.s2):
            images[(d1, d2)] = rep.image(twist(d1, d2))
    return MatrixRep(rep.dimension, images)


def _compose(a: Hashable, b: Hashable) -> Tuple[int, Hashable]:
    """Product key of a and b with its closed-loop count."""
    if isinstance(a, WalledDiagram):
        return concat(a, b)
    if isinstance(a, tuple) and a and not isinstance(a[0], int):
        loops, parts = 0, []
        for x, y in zip(a, b):
            extra, part = _compose(x, y)
            loops += extra
            parts.append(part)
        return loops, tuple(parts)
    # permutations compose as functions: a after b
    return 0, tuple(a[i] for i in b)


def check_product_law(rep: MatrixRep, delta0: Optional[DeltaLike] = None) -> Optional[Tuple[Hashable, Hashable]]:
    """First pair (a, b) with image(a) image(b) != delta0^loops image(ab), if any."""
    value = _delta_value(delta0)
    for a, ma in rep.images.items():
        for b, mb in rep.images.items():
            loops, ab = _compose(a, b)
            if not np.array_equal(ma @ mb, rep.image(ab) * value ** loops):
                return a, b
    return None


# --- intertwiners -----------------------------------------------------------


def _rank(rows: List[Dict[int, Fraction]], width: int) -> int:
    if not rows or width == 0:
        return 0
    dense = [[QQ(0)] * width for _ in rows]
    for i, row in enumerate(rows):
        for j, value in row.items():
            dense[i][j] = QQ(value.numerator, value.denominator)
    return DomainMatrix(dense, (len(rows), width), QQ).rank()


def hom_space_dim(rep_a: MatrixRep, rep_b: MatrixRep) -> int:
    """
    Dimension of {T : T A(g) = B(g) T for every basis element g}.

    Raises:
        BasisMismatch: If the two representations are keyed by different bases.
    """
    if set(rep_a.images) != set(rep_b.images):
        raise BasisMismatch("Representations are not defined on the same algebra basis")
    da, db = rep_a.dimension, rep_b.dimension
    width = da * db
    rows: List[Dict[int, Fraction]] = []
    seen = set()
    for key in rep_a.images:
        ma, mb = rep_a.image(key), rep_b.image(key)
        for i in range(db):
            for k in range(da):
                # unknown T[i][j] sits at column i * da + j
                row: Dict[int, Fraction] = {}
                for j in range(da):
                    if ma[j, k]:
                        col = i * da + j
                        row[col] = row.get(col, Fraction(0)) + ma[j, k]
                for j in range(db):
                    if mb[i, j]:
                        col = j * da + k
                        row[col] = row.get(col, Fraction(0)) - mb[i, j]
                frozen = frozenset((c, v) for c, v in row.items() if v)
                if frozen and frozen not in seen:
                    seen.add(frozen)
                    rows.append(dict(frozen))
    return width - _rank(rows, width)


def brute_restriction(
    shape: SplitShape, cell: CellLabel, delta0: Optional[DeltaLike] = None
) -> Dict[Tuple[CellLabel, CellLabel], int]:
    """
    Multiplicities of Δ(c1) (x) Δ(c2) in Res Δ_{r,s}(cell), from intertwiner ranks.

    Raises:
        SizeExceeded: If r+s exceeds the oracle bound.
    """
    _check_oracle_size(shape.r, shape.s)
    value = _delta_value(delta0)
    restricted = restricted_rep(cell_module_matrices(shape.r, shape.s, cell, value), shape)
    table = {}
    for c1 in cells_of(shape.r1, shape.s1):
        first = cell_module_matrices(shape.r1, shape.s1, c1, value)
        for c2 in cells_of(shape.r2, shape.s2):
            second = cell_module_matrices(shape.r2, shape.s2, c2, value)
            multiplicity = hom_space_dim(tensor_rep(first, second), restricted)
            if multiplicity:
                table[(c1, c2)] = multiplicity
    return table


def specht_pair_rep(lam_l: PartitionLike, lam_r: PartitionLike) -> MatrixRep:
    """S^lamL [x] S^lamR as a representation of Σ_a x Σ_b."""
    left, right = as_parts(lam_l), as_parts(lam_r)
    return tensor_rep(specht_matrices(sum(left), left), specht_matrices(sum(right), right))


def character(rep: MatrixRep, key: Hashable) -> Fraction:
    return sum(rep.image(key).diagonal(), Fraction(0))
