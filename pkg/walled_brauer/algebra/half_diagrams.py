"""
Half diagrams and the partial diagram module V^l_{r,s}.

A half diagram is one row of r+s dots carrying l wall-crossing arcs;
the remaining dots are free. Diagrams act from above by stacking. When
two free dots get joined the action is zero and ``act`` returns None.
Otherwise the free dots are carried to the image's free dots, and this
bijection (numbered left to right, separately on each side of the wall)
is the permutation part of the action.
"""

import itertools
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from walled_brauer.algebra.coeff_ring import LaurentPoly
from walled_brauer.algebra.diagrams import (
    AlgebraElement,
    Pair,
    WalledDiagram,
    canonical_pairs,
    partner_map,
    top_arcs,
    trace_strands,
)
from walled_brauer.errors import RangeError, SizeMismatch, WallViolation

Perm = Tuple[int, ...]


class HalfDiagram(BaseModel):
    """An (r,s,l)-half diagram; arcs are (left, right) sorted by left endpoint."""

    model_config = ConfigDict(frozen=True)

    r: int
    s: int
    arcs: Tuple[Pair, ...] = ()

    @model_validator(mode="after")
    def _check_arcs(self) -> "HalfDiagram":
        seen = set()
        for i, j in self.arcs:
            if not (1 <= i <= self.r < j <= self.r + self.s):
                raise WallViolation(f"Arc ({i},{j}) does not cross the wall at {self.r}")
            if i in seen or j in seen:
                raise WallViolation(f"Arc ({i},{j}) reuses a dot")
            seen.update((i, j))
        if list(self.arcs) != sorted(self.arcs):
            raise ValueError(f"Arcs must be sorted by left endpoint: {self.arcs}")
        return self

    @property
    def l(self) -> int:
        return len(self.arcs)

    def free_dots(self) -> Tuple[List[int], List[int]]:
        """Free positions left and right of the wall, in increasing order."""
        used = {p for arc in self.arcs for p in arc}
        left = [p for p in range(1, self.r + 1) if p not in used]
        right = [p for p in range(self.r + 1, self.r + self.s + 1) if p not in used]
        return left, right


class HalfAction(BaseModel):
    """Result of a nonzero action x * v."""

    model_config = ConfigDict(frozen=True)

    loops: int
    image: HalfDiagram
    perm_left: Perm
    perm_right: Perm

    @property
    def perm(self) -> Tuple[Perm, Perm]:
        return self.perm_left, self.perm_right


def _half(r: int, s: int, arcs: Sequence[Pair]) -> HalfDiagram:
    return HalfDiagram.model_construct(r=r, s=s, arcs=tuple(sorted(arcs)))


def _check_range(r: int, s: int, l: int) -> None:
    if l < 0 or l > min(r, s):
        raise RangeError(f"Arc count l={l} is outside 0..{min(r, s)} for B_{{{r},{s}}}")


def dim_half(r: int, s: int, l: int) -> int:
    _check_range(r, s, l)
    return comb(r, l) * comb(s, l) * factorial(l)


def enumerate_half(r: int, s: int, l: int) -> List[HalfDiagram]:
    _check_range(r, s, l)
    result = []
    for lefts in itertools.combinations(range(1, r + 1), l):
        for rights in itertools.combinations(range(r + 1, r + s + 1), l):
            for image in itertools.permutations(rights):
                result.append(_half(r, s, list(zip(lefts, image))))
    return result


def top_half(d: WalledDiagram) -> HalfDiagram:
    """Upper half of a diagram: its top arcs on one row."""
    return _half(d.r, d.s, [(min(a, b), max(a, b)) for a, b in top_arcs(d)])


def compose_perm(outer: Perm, inner: Perm) -> Perm:
    """outer after inner."""
    return tuple(outer[i] for i in inner)


def act(x: WalledDiagram, v: HalfDiagram) -> Optional[HalfAction]:
    """
    Stack x above v.

    Returns None when the result has more arcs than v.

    Raises:
        SizeMismatch: If x and v have different (r, s).
    """
    if (x.r, x.s) != (v.r, v.s):
        raise SizeMismatch(f"B_{{{x.r},{x.s}}} cannot act on an ({v.r},{v.s}) half diagram")
    n = v.r + v.s
    left_free, right_free = v.free_dots()
    lower: Dict[int, int] = {}
    for i, j in v.arcs:
        lower[i], lower[j] = j, i
    for p in left_free + right_free:
        lower[p], lower[-p] = -p, p

    loops, pairs = trace_strands(partner_map(x), lower, n)
    arcs: List[Pair] = []
    carried: Dict[int, int] = {}
    for a, b in pairs:
        if a > 0 and b > 0:
            arcs.append((min(a, b), max(a, b)))
        elif a < 0 and b < 0:
            return None
        else:
            top, bottom = (a, b) if a > 0 else (b, a)
            carried[-bottom] = top

    image = _half(v.r, v.s, arcs)
    image_left, image_right = image.free_dots()
    left_index = {p: i for i, p in enumerate(image_left)}
    right_index = {p: i for i, p in enumerate(image_right)}
    return HalfAction(
        loops=loops,
        image=image,
        perm_left=tuple(left_index[carried[p]] for p in left_free),
        perm_right=tuple(right_index[carried[p]] for p in right_free),
    )


def make_v0(r: int, s: int, l: int) -> HalfDiagram:
    """The l arcs nested innermost against the wall."""
    _check_range(r, s, l)
    return _half(r, s, [(r - l + i, r + l + 1 - i) for i in range(1, l + 1)])


def make_idempotent(r: int, s: int, l: int) -> AlgebraElement:
    """delta^-l times the diagram with the v0 arc pattern on both rows."""
    v0 = make_v0(r, s, l)
    left_free, right_free = v0.free_dots()
    pairs = list(v0.arcs) + [(-i, -j) for i, j in v0.arcs]
    pairs += [(p, -p) for p in left_free + right_free]
    diagram = WalledDiagram.model_construct(r=r, s=s, pairs=canonical_pairs(pairs, r + s))
    return AlgebraElement.from_diagram(diagram, LaurentPoly.delta_power(-l))
