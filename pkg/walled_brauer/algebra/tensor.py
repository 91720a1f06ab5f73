"""
Embedding B_{r,s} (x) B_{n,m} into B_{r+n,s+m}.

iota pads a diagram with identity strands next to the wall, zeta pads
it with identity strands on the outer flanks, and the twisted tensor
product D [x] D' is iota(D) * zeta(D'). The first factor ends up on the
outer blocks, the second on the inner blocks.
"""

from typing import Dict, List

from walled_brauer.algebra.coeff_ring import LaurentPoly
from walled_brauer.algebra.diagrams import (
    AlgebraElement,
    Pair,
    WalledDiagram,
    canonical_pairs,
    concat,
)
from walled_brauer.errors import SizeMismatch


def _relabel(d: WalledDiagram, r_new: int, left_offset: int, right_offset: int) -> List[Pair]:
    """Move d's left block by left_offset and its right block to start after r_new + right_offset."""

    def move(dot: int) -> int:
        p = abs(dot)
        q = p + left_offset if p <= d.r else (p - d.r) + r_new + right_offset
        return q if dot > 0 else -q

    return [(move(a), move(b)) for a, b in d.pairs]


def _pad(r_new: int, s_new: int, pairs: List[Pair]) -> WalledDiagram:
    used = {abs(a) for pair in pairs for a in pair}
    padded = pairs + [(k, -k) for k in range(1, r_new + s_new + 1) if k not in used]
    return WalledDiagram.model_construct(r=r_new, s=s_new, pairs=canonical_pairs(padded, r_new + s_new))


def iota(d: WalledDiagram, n: int, m: int) -> WalledDiagram:
    """Insert n identity strands left of the wall and m right of it."""
    if n < 0 or m < 0:
        raise SizeMismatch(f"Insertion sizes must be nonnegative, got n={n}, m={m}")
    r_new = d.r + n
    return _pad(r_new, d.s + m, _relabel(d, r_new, 0, m))


def zeta(d: WalledDiagram, r: int, s: int) -> WalledDiagram:
    """Flank d with r identity strands on the left and s on the right."""
    if r < 0 or s < 0:
        raise SizeMismatch(f"Flank sizes must be nonnegative, got r={r}, s={s}")
    r_new = r + d.r
    return _pad(r_new, d.s + s, _relabel(d, r_new, r, 0))


def twist(d1: WalledDiagram, d2: WalledDiagram) -> WalledDiagram:
    """D1 [x] D2 as a single diagram, merged directly from both pairings."""
    r_new = d1.r + d2.r
    pairs = _relabel(d1, r_new, 0, d2.s) + _relabel(d2, r_new, d1.r, 0)
    return WalledDiagram.model_construct(
        r=r_new, s=d1.s + d2.s, pairs=canonical_pairs(pairs, r_new + d1.s + d2.s)
    )


def twist_by_composition(d1: WalledDiagram, d2: WalledDiagram) -> AlgebraElement:
    """D1 [x] D2 computed from its definition iota(D1) * zeta(D2)."""
    loops, result = concat(iota(d1, d2.r, d2.s), zeta(d2, d1.r, d1.s))
    return AlgebraElement.from_diagram(result, LaurentPoly.delta_power(loops))


def twisted_tensor(d1: WalledDiagram, d2: WalledDiagram) -> AlgebraElement:
    return AlgebraElement.from_diagram(twist(d1, d2))


def embed_rho(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the twisted tensor product."""
    image: Dict[WalledDiagram, LaurentPoly] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            target = twist(a, b)
            image[target] = image.get(target, LaurentPoly.zero()) + ca * cb
    return AlgebraElement(x.r + y.r, x.s + y.s, image)
