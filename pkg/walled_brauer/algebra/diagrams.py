"""
Walled Brauer diagrams and the diagram algebra B_{r,s}(delta).

Dots are integers: top dot k is ``k`` and bottom dot k-bar is ``-k``,
for k in 1..r+s. The wall sits between positions r and r+1. Pairs are
stored canonically under the order 1 < ... < n < -1 < ... < -n.
"""

import logging
import random
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from walled_brauer.algebra.coeff_ring import LaurentPoly, Scalar
from walled_brauer.config import get_settings
from walled_brauer.errors import BoundExceeded, NotAMatching, SizeMismatch, WallViolation

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def dot_key(dot: int, n: int) -> int:
    """Position of a dot in the canonical order."""
    return dot if dot > 0 else n - dot


def canonical_pairs(pairs: Iterable[Sequence[int]], n: int) -> Tuple[Pair, ...]:
    ordered = []
    for a, b in pairs:
        if dot_key(a, n) > dot_key(b, n):
            a, b = b, a
        ordered.append((a, b))
    ordered.sort(key=lambda pair: dot_key(pair[0], n))
    return tuple(ordered)


class WalledDiagram(BaseModel):
    """A basis diagram of B_{r,s}: a wall-respecting perfect matching."""

    model_config = ConfigDict(frozen=True)

    r: int
    s: int
    pairs: Tuple[Pair, ...]

    @property
    def n(self) -> int:
        return self.r + self.s

    @property
    def sort_key(self) -> Tuple[Pair, ...]:
        n = self.n
        return tuple((dot_key(a, n), dot_key(b, n)) for a, b in self.pairs)

    def partner(self, dot: int) -> int:
        return partner_map(self)[dot]

    def __str__(self) -> str:
        def label(d: int) -> str:
            return str(d) if d > 0 else f"{-d}'"

        body = ", ".join(f"{label(a)}-{label(b)}" for a, b in self.pairs)
        return f"B_{{{self.r},{self.s}}}[{body}]"


@lru_cache(maxsize=65536)
def partner_map(d: WalledDiagram) -> Dict[int, int]:
    mapping: Dict[int, int] = {}
    for a, b in d.pairs:
        mapping[a] = b
        mapping[b] = a
    return mapping


def _make(r: int, s: int, pairs: Iterable[Sequence[int]]) -> WalledDiagram:
    # Internal constructor for results that are valid by construction.
    return WalledDiagram.model_construct(r=r, s=s, pairs=canonical_pairs(pairs, r + s))


def validate(r: int, s: int, pairing: Iterable[Sequence[int]]) -> WalledDiagram:
    """
    Build a diagram after checking the matching and wall conditions.

    Raises:
        NotAMatching: If a dot is repeated, missing or out of range.
        WallViolation: If a propagating edge crosses the wall or an arc
            stays on one side.
    """
    if r < 0 or s < 0:
        raise SizeMismatch(f"Side sizes must be nonnegative, got r={r}, s={s}")
    n = r + s
    pairs: List[Pair] = []
    seen = set()
    for entry in pairing:
        entry = tuple(entry)
        if len(entry) != 2:
            raise NotAMatching(f"Pair {entry!r} does not have two endpoints")
        for dot in entry:
            if not isinstance(dot, int) or dot == 0 or abs(dot) > n:
                raise NotAMatching(f"Dot {dot!r} is out of range for r+s={n}")
            if dot in seen:
                raise NotAMatching(f"Dot {dot} appears twice")
            seen.add(dot)
        pairs.append((entry[0], entry[1]))
    if len(seen) != 2 * n:
        missing = sorted((set(range(1, n + 1)) | set(range(-n, 0))) - seen)
        raise NotAMatching(f"Dots {missing} are not matched")

    for a, b in pairs:
        left_a, left_b = abs(a) <= r, abs(b) <= r
        if (a > 0) == (b > 0):
            if left_a == left_b:
                raise WallViolation(f"Arc {a}-{b} does not cross the wall at {r}")
        elif left_a != left_b:
            raise WallViolation(f"Propagating edge {a}-{b} crosses the wall at {r}")
    return _make(r, s, pairs)


def identity(r: int, s: int) -> WalledDiagram:
    return _make(r, s, [(k, -k) for k in range(1, r + s + 1)])


def from_permutations(r: int, s: int, left: Sequence[int], right: Sequence[int]) -> WalledDiagram:
    """
    Permutation diagram of Σ_r x Σ_s: top i joins bottom left[i-1].

    ``right`` is indexed relative to the wall, so top r+j joins bottom
    r+right[j-1].
    """
    if sorted(left) != list(range(1, r + 1)) or sorted(right) != list(range(1, s + 1)):
        raise NotAMatching(f"Not permutations of sizes ({r},{s}): {left}, {right}")
    pairs = [(i, -left[i - 1]) for i in range(1, r + 1)]
    pairs += [(r + j, -(r + right[j - 1])) for j in range(1, s + 1)]
    return _make(r, s, pairs)


def top_arcs(d: WalledDiagram) -> List[Pair]:
    return [(a, b) for a, b in d.pairs if a > 0 and b > 0]


def bottom_arcs(d: WalledDiagram) -> List[Pair]:
    return [(a, b) for a, b in d.pairs if a < 0 and b < 0]


def arc_count(d: WalledDiagram) -> int:
    return len(top_arcs(d))


def propagating_count(d: WalledDiagram) -> int:
    return sum(1 for a, b in d.pairs if (a > 0) != (b > 0))


def involution_star(d: WalledDiagram) -> WalledDiagram:
    """Reflect top and bottom rows."""
    return _make(d.r, d.s, [(-a, -b) for a, b in d.pairs])


def trace_strands(upper: Dict[int, int], lower: Dict[int, int], n: int) -> Tuple[int, List[Pair]]:
    """
    Stack ``upper`` on ``lower`` and follow every strand.

    Both objects are partner maps. In ``upper`` the positive dots are
    exterior and -k is middle dot k; in ``lower`` the positive dots are
    middle dots and negative dots are exterior. Returns the number of
    closed loops confined to the middle row and the exterior pairs.
    """
    visited = set()

    def descend(middle: int) -> int:
        # enter ``lower`` at a middle dot and walk until an exterior dot
        while True:
            visited.add(middle)
            nxt = lower[middle]
            if nxt < 0:
                return nxt
            visited.add(nxt)
            back = upper[-nxt]
            if back > 0:
                return back
            middle = -back

    def ascend(middle: int) -> int:
        while True:
            visited.add(middle)
            nxt = upper[-middle]
            if nxt > 0:
                return nxt
            middle = -nxt
            visited.add(middle)
            down = lower[middle]
            if down < 0:
                return down
            middle = down

    pairs: List[Pair] = []
    done = set()
    for k in range(1, n + 1):
        if k in done:
            continue
        p = upper[k]
        end = p if p > 0 else descend(-p)
        pairs.append((k, end))
        done.update((k, end))
    for k in sorted((d for d in lower if d < 0), reverse=True):
        if k in done:
            continue
        q = lower[k]
        end = q if q < 0 else ascend(q)
        pairs.append((k, end))
        done.update((k, end))

    loops = 0
    for m in range(1, n + 1):
        if m in visited:
            continue
        loops += 1
        current = m
        while current not in visited:
            visited.add(current)
            nxt = lower[current]
            visited.add(nxt)
            current = -upper[-nxt]
    return loops, pairs


def concat(a: WalledDiagram, b: WalledDiagram) -> Tuple[int, WalledDiagram]:
    """
    Stack ``a`` above ``b`` and return (closed loops, resulting diagram).

    Raises:
        SizeMismatch: If the diagrams live in different algebras.
    """
    if (a.r, a.s) != (b.r, b.s):
        raise SizeMismatch(f"Cannot compose B_{{{a.r},{a.s}}} with B_{{{b.r},{b.s}}}")
    loops, pairs = trace_strands(partner_map(a), partner_map(b), a.n)
    return loops, _make(a.r, a.s, pairs)


@lru_cache(maxsize=None)
def _basis(r: int, s: int) -> Tuple[WalledDiagram, ...]:
    n = r + s
    order = list(range(1, n + 1)) + [-k for k in range(1, n + 1)]

    def allowed(a: int, b: int) -> bool:
        same_side = (abs(a) <= r) == (abs(b) <= r)
        same_row = (a > 0) == (b > 0)
        return same_side != same_row

    found: List[WalledDiagram] = []

    def extend(remaining: List[int], pairs: List[Pair]) -> None:
        if not remaining:
            found.append(WalledDiagram.model_construct(r=r, s=s, pairs=tuple(pairs)))
            return
        first, rest = remaining[0], remaining[1:]
        for i, other in enumerate(rest):
            if allowed(first, other):
                pairs.append((first, other))
                extend(rest[:i] + rest[i + 1:], pairs)
                pairs.pop()

    extend(order, [])
    logger.debug(f"Enumerated {len(found)} diagrams of B_{{{r},{s}}}")
    return tuple(found)


def enumerate_basis(r: int, s: int, max_size: Optional[int] = None) -> List[WalledDiagram]:
    """
    All diagrams of B_{r,s} in canonical order.

    Raises:
        BoundExceeded: If r+s exceeds the configured enumeration bound.
    """
    bound = get_settings().max_size if max_size is None else max_size
    if r + s > bound:
        raise BoundExceeded(f"B_{{{r},{s}}} exceeds the enumeration bound r+s <= {bound}")
    return list(_basis(r, s))


def basis_dimension(r: int, s: int) -> int:
    return sum(
        (comb(r, l) * comb(s, l) * factorial(l)) ** 2 * factorial(r - l) * factorial(s - l)
        for l in range(min(r, s) + 1)
    )


def random_diagram(r: int, s: int, rng: random.Random) -> WalledDiagram:
    return rng.choice(_basis(r, s))


class AlgebraElement:
    """Finite combination of diagrams of one B_{r,s} with Laurent coefficients."""

    __slots__ = ("r", "s", "_terms")

    def __init__(self, r: int, s: int, terms: Optional[Dict[WalledDiagram, LaurentPoly]] = None):
        self.r = r
        self.s = s
        cleaned: Dict[WalledDiagram, LaurentPoly] = {}
        for diagram, coeff in (terms or {}).items():
            if (diagram.r, diagram.s) != (r, s):
                raise SizeMismatch(f"{diagram} does not belong to B_{{{r},{s}}}")
            if not isinstance(coeff, LaurentPoly):
                coeff = LaurentPoly.constant(coeff)
            if coeff:
                cleaned[diagram] = coeff
        self._terms = cleaned

    @classmethod
    def zero(cls, r: int, s: int) -> "AlgebraElement":
        return cls(r, s)

    @classmethod
    def unit(cls, r: int, s: int) -> "AlgebraElement":
        return cls(r, s, {identity(r, s): LaurentPoly.one()})

    @classmethod
    def from_diagram(cls, d: WalledDiagram, coeff=1) -> "AlgebraElement":
        return cls(d.r, d.s, {d: coeff if isinstance(coeff, LaurentPoly) else LaurentPoly.constant(coeff)})

    @property
    def terms(self) -> Dict[WalledDiagram, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[WalledDiagram, LaurentPoly]]:
        """Terms in canonical diagram order."""
        for diagram in sorted(self._terms, key=lambda d: d.sort_key):
            yield diagram, self._terms[diagram]

    def coefficient(self, d: WalledDiagram) -> LaurentPoly:
        return self._terms.get(d, LaurentPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "AlgebraElement") -> None:
        if (self.r, self.s) != (other.r, other.s):
            raise SizeMismatch(
                f"Elements of B_{{{self.r},{self.s}}} and B_{{{other.r},{other.s}}} cannot be combined"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        merged = dict(self._terms)
        for diagram, coeff in other._terms.items():
            merged[diagram] = merged.get(diagram, LaurentPoly.zero()) + coeff
        return AlgebraElement(self.r, self.s, merged)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.r, self.s, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, factor) -> "AlgebraElement":
        return AlgebraElement(self.r, self.s, {d: c * factor for d, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self) -> "AlgebraElement":
        return AlgebraElement(self.r, self.s, {involution_star(d): c for d, c in self._terms.items()})

    def evaluate(self, delta0: Scalar) -> Dict[WalledDiagram, Fraction]:
        values = {d: c(delta0) for d, c in self._terms.items()}
        return {d: v for d, v in values.items() if v != 0}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.r, self.s) == (other.r, other.s) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.r, self.s, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"AlgebraElement(B_{{{self.r},{self.s}}}: 0)"
        body = " + ".join(f"({c}){d}" for d, c in self.items())
        return f"AlgebraElement({body})"


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the diagram product, delta per closed loop."""
    x._check(y)
    product: Dict[WalledDiagram, LaurentPoly] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            loops, result = concat(a, b)
            term = ca * cb * LaurentPoly.delta_power(loops)
            product[result] = product.get(result, LaurentPoly.zero()) + term
    return AlgebraElement(x.r, x.s, product)
