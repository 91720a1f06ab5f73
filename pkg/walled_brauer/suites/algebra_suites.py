"""
Suites for the diagram algebra itself: the product, the twisted tensor
embedding, the half-diagram module and its idempotents.
"""

import itertools
import logging
from typing import Iterator, List, Tuple

from walled_brauer.algebra.diagrams import (
    AlgebraElement,
    WalledDiagram,
    basis_dimension,
    concat,
    enumerate_basis,
    identity,
    involution_star,
    propagating_count,
    random_diagram,
    validate,
)
from walled_brauer.algebra.half_diagrams import act, compose_perm, enumerate_half, make_idempotent, make_v0
from walled_brauer.algebra.tensor import embed_rho, iota, twist, twist_by_composition, zeta
from walled_brauer.suites.base import BaseSuite, SuiteFailure
from walled_brauer.types import GenericDelta

logger = logging.getLogger(__name__)

# A worked B_{3,5} product: left times right is delta times the product diagram.
WORKED_LEFT = [(1, -2), (2, 6), (3, 7), (4, -8), (5, -7), (8, -4), (-1, -5), (-3, -6)]
WORKED_RIGHT = [(2, -1), (1, 6), (3, 5), (4, -5), (7, -4), (8, -8), (-2, -6), (-3, -7)]
WORKED_PRODUCT = [(1, -1), (4, -8), (5, -4), (8, -5), (2, 6), (3, 7), (-2, -6), (-3, -7)]


def sizes_up_to(total: int) -> Iterator[Tuple[int, int]]:
    """Every (r, s) with r + s <= total."""
    for n in range(total + 1):
        for r in range(n + 1):
            yield r, n - r


def sizes_each_up_to(bound: int) -> Iterator[Tuple[int, int]]:
    """Every (r, s) with r, s <= bound."""
    for r in range(bound + 1):
        for s in range(bound + 1):
            yield r, s


def _associative(a: WalledDiagram, b: WalledDiagram, c: WalledDiagram) -> bool:
    l1, ab = concat(a, b)
    l2, left = concat(ab, c)
    l3, bc = concat(b, c)
    l4, right = concat(a, bc)
    return left == right and l1 + l2 == l3 + l4


class AlgebraSoundnessSuite(BaseSuite):
    """Associativity, unit laws, basis counts and the worked B_{3,5} product."""

    def get_name(self) -> str:
        return "algebra-soundness"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        exhaustive = 3 if self.full else 2

        for r, s in sizes_up_to(exhaustive):
            basis = enumerate_basis(r, s)
            one = identity(r, s)
            for a in basis:
                if concat(one, a) != (0, a) or concat(a, one) != (0, a):
                    raise SuiteFailure("unit-law", diagram=a)
                checks += 1
            for a, b, c in itertools.product(basis, repeat=3):
                if not _associative(a, b, c):
                    raise SuiteFailure("associativity", a=a, b=b, c=c)
                checks += 1

        rng = self.rng()
        samples = self.sample_size if self.full else min(50, self.sample_size)
        shapes = [(r, s) for r, s in sizes_up_to(5 if self.full else 3) if r + s > 0]
        for _ in range(samples):
            r, s = rng.choice(shapes)
            a, b, c = (random_diagram(r, s, rng) for _ in range(3))
            if not _associative(a, b, c):
                raise SuiteFailure("associativity", a=a, b=b, c=c)
            checks += 1

        for r, s in sizes_each_up_to(3 if self.full else 2):
            enumerated = len(enumerate_basis(r, s))
            if enumerated != basis_dimension(r, s):
                raise SuiteFailure("basis-count", r=r, s=s, enumerated=enumerated, formula=basis_dimension(r, s))
            checks += 1

        left, right = validate(3, 5, WORKED_LEFT), validate(3, 5, WORKED_RIGHT)
        loops, product = concat(left, right)
        if loops != 1 or product != validate(3, 5, WORKED_PRODUCT) or propagating_count(product) != 4:
            raise SuiteFailure("worked-product", left=left, right=right, loops=loops, product=product)
        checks += 1

        logger.debug(f"algebra-soundness: {samples} random triples")
        return checks


class PropagationMonotonicitySuite(BaseSuite):
    """Products never gain propagating edges; the star reverses products."""

    def get_name(self) -> str:
        return "propagation-monotonicity"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for r, s in sizes_up_to(4 if self.full else 3):
            basis = enumerate_basis(r, s)
            for a in basis:
                for b in basis:
                    loops, ab = concat(a, b)
                    if propagating_count(ab) > min(propagating_count(a), propagating_count(b)):
                        raise SuiteFailure("propagating-edges", a=a, b=b, product=ab)
                    if concat(involution_star(b), involution_star(a)) != (loops, involution_star(ab)):
                        raise SuiteFailure("star-anti-automorphism", a=a, b=b)
                    checks += 2
        return checks


class TwistedEmbeddingSuite(BaseSuite):
    """iota, zeta and the twisted tensor product as algebra maps."""

    def get_name(self) -> str:
        return "twisted-embedding"

    def factor_pairs(self) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
        pairs = [((1, 1), (1, 1)), ((1, 0), (0, 1))]
        if self.full:
            small = [(1, 0), (0, 1), (1, 1)]
            pairs += [(p, q) for p in small for q in small if (p, q) not in pairs]
            pairs += [((2, 0), (0, 2)), ((2, 1), (1, 0))]
        return pairs

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for (r, s), (n, m) in self.factor_pairs():
            first, second = enumerate_basis(r, s), enumerate_basis(n, m)

            images = set()
            for d1 in first:
                for d2 in second:
                    merged = twist(d1, d2)
                    if AlgebraElement.from_diagram(merged) != twist_by_composition(d1, d2):
                        raise SuiteFailure("twist-definition", d1=d1, d2=d2)
                    if concat(iota(d1, n, m), zeta(d2, r, s)) != concat(zeta(d2, r, s), iota(d1, n, m)):
                        raise SuiteFailure("iota-zeta-commute", d1=d1, d2=d2)
                    images.add(merged)
                    checks += 2
            if len(images) != len(first) * len(second):
                raise SuiteFailure("injectivity", first=[r, s], second=[n, m], images=len(images))

            for a, b in itertools.product(first, repeat=2):
                loops, ab = concat(a, b)
                if concat(iota(a, n, m), iota(b, n, m)) != (loops, iota(ab, n, m)):
                    raise SuiteFailure("iota-homomorphism", a=a, b=b, n=n, m=m)
                checks += 1
            for a, b in itertools.product(second, repeat=2):
                loops, ab = concat(a, b)
                if concat(zeta(a, r, s), zeta(b, r, s)) != (loops, zeta(ab, r, s)):
                    raise SuiteFailure("zeta-homomorphism", a=a, b=b, r=r, s=s)
                checks += 1

            for a1, a2 in itertools.product(first, repeat=2):
                x1, x2 = AlgebraElement.from_diagram(a1), AlgebraElement.from_diagram(a2)
                for b1, b2 in itertools.product(second, repeat=2):
                    y1, y2 = AlgebraElement.from_diagram(b1), AlgebraElement.from_diagram(b2)
                    if embed_rho(x1 * x2, y1 * y2) != embed_rho(x1, y1) * embed_rho(x2, y2):
                        raise SuiteFailure("tensor-homomorphism", a1=a1, a2=a2, b1=b1, b2=b2)
                    checks += 1

        rng = self.rng()
        samples = 200 if self.full else 20
        small = [(r, s) for r, s in sizes_up_to(2) if r + s > 0]
        for _ in range(samples):
            d1, d2, d3 = (random_diagram(*rng.choice(small), rng) for _ in range(3))
            if twist(twist(d1, d2), d3) != twist(d1, twist(d2, d3)):
                raise SuiteFailure("tensor-associativity", d1=d1, d2=d2, d3=d3)
            checks += 1
        return checks


class HalfModuleSuite(BaseSuite):
    """The half-diagram action is a module action and keeps the wall."""

    def get_name(self) -> str:
        return "half-module"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for r, s in sizes_up_to(3 if self.full else 2):
            basis = enumerate_basis(r, s)
            for l in range(min(r, s) + 1):
                for v in enumerate_half(r, s, l):
                    for x in basis:
                        checks += self._check_wall(x, v)
                        for y in basis:
                            checks += self._check_module_law(x, y, v)
        return checks

    @staticmethod
    def _check_wall(x: WalledDiagram, v) -> int:
        result = act(x, v)
        if result is None:
            return 1
        if result.image.l != v.l:
            raise SuiteFailure("arc-count-preserved", x=x, v=v)
        if sorted(result.perm_left) != list(range(v.r - v.l)) or sorted(result.perm_right) != list(range(v.s - v.l)):
            raise SuiteFailure("wall-preserving-permutation", x=x, v=v)
        return 1

    @staticmethod
    def _check_module_law(x: WalledDiagram, y: WalledDiagram, v) -> int:
        loops, xy = concat(x, y)
        direct = act(xy, v)
        inner = act(y, v)
        outer = act(x, inner.image) if inner is not None else None
        if direct is None or outer is None:
            if (direct is None) != (outer is None):
                raise SuiteFailure("module-law", x=x, y=y, v=v)
            return 1
        same = (
            direct.image == outer.image
            and loops + direct.loops == inner.loops + outer.loops
            and direct.perm_left == compose_perm(outer.perm_left, inner.perm_left)
            and direct.perm_right == compose_perm(outer.perm_right, inner.perm_right)
        )
        if not same:
            raise SuiteFailure("module-law", x=x, y=y, v=v)
        return 1


class IdempotentSuite(BaseSuite):
    """e_{r,s,l} squares to itself and fixes v0."""

    def get_name(self) -> str:
        return "idempotents"

    def check(self, delta0: GenericDelta) -> int:
        checks = 0
        for r, s in sizes_each_up_to(3 if self.full else 2):
            for l in range(min(r, s) + 1):
                e = make_idempotent(r, s, l)
                if e * e != e:
                    raise SuiteFailure("idempotent", r=r, s=s, l=l)
                diagram = next(iter(e.terms))
                v0 = make_v0(r, s, l)
                fixed = act(diagram, v0)
                if fixed is None or fixed.image != v0 or fixed.loops != l or fixed.perm_left != tuple(range(r - l)):
                    raise SuiteFailure("fixes-v0", r=r, s=s, l=l)
                checks += 2
        return checks
