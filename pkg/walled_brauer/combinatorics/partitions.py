"""
Partition combinatorics for the symmetric groups.

Provides:
- Partition enumeration in reverse-lexicographic order
- Hook lengths, standard tableaux and their counts
- Littlewood-Richardson coefficients by skew tableau enumeration
- Murnaghan-Nakayama characters and a character-based LR cross-check

Internally partitions are plain tuples so the memo tables stay cheap;
the public functions accept either tuples or ``Partition`` models.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple, Union

from walled_brauer.errors import SizeMismatch
from walled_brauer.types import Partition

logger = logging.getLogger(__name__)

Parts = Tuple[int, ...]
PartitionLike = Union[Partition, Sequence[int]]
Tableau = Tuple[Tuple[int, ...], ...]


def as_parts(value: PartitionLike) -> Parts:
    if isinstance(value, Partition):
        return value.parts
    return tuple(int(p) for p in value if p)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Parts, ...]:
    if n == 0:
        return ((),)
    found: List[Parts] = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            found.append((first,) + rest)
    return tuple(found)


def partitions_of(n: int) -> List[Partition]:
    """All partitions of n, largest first part first."""
    if n < 0:
        return []
    return [Partition(parts=p) for p in _partitions(n, n)]


def conjugate(value: PartitionLike) -> Parts:
    parts = as_parts(value)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def hook_lengths(value: PartitionLike) -> List[List[int]]:
    parts = as_parts(value)
    columns = conjugate(parts)
    return [[parts[i] - j + columns[j] - i - 1 for j in range(parts[i])] for i in range(len(parts))]


def syt_count(value: PartitionLike) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    parts = as_parts(value)
    product = 1
    for row in hook_lengths(parts):
        for hook in row:
            product *= hook
    return factorial(sum(parts)) // product


@lru_cache(maxsize=None)
def _tableaux(parts: Parts) -> Tuple[Tableau, ...]:
    n = sum(parts)
    if n == 0:
        return ((),)
    found: List[Tableau] = []
    for i, length in enumerate(parts):
        # removable corner at the end of row i
        if i + 1 < len(parts) and parts[i + 1] == length:
            continue
        smaller = list(parts)
        smaller[i] -= 1
        smaller_parts = tuple(p for p in smaller if p)
        for tableau in _tableaux(smaller_parts):
            rows = [list(row) for row in tableau]
            if i == len(rows):
                rows.append([n])
            else:
                rows[i].append(n)
            found.append(tuple(tuple(row) for row in rows))
    return tuple(sorted(found))


def standard_tableaux(value: PartitionLike) -> List[Tableau]:
    """Standard tableaux of a shape, sorted by their rows."""
    return list(_tableaux(as_parts(value)))


def contains(outer: PartitionLike, inner: PartitionLike) -> bool:
    big, small = as_parts(outer), as_parts(inner)
    if len(small) > len(big):
        return False
    return all(small[i] <= big[i] for i in range(len(small)))


@lru_cache(maxsize=None)
def _lr(lam: Parts, mu: Parts, nu: Parts) -> int:
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    if not mu:
        return 1
    inner = lam + (0,) * (len(nu) - len(lam))
    # reading order: rows top to bottom, each row right to left
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, inner[i] - 1, -1)]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        upper = len(mu)
        right = filling.get((i, j + 1))
        if right is not None:
            upper = min(upper, right)
        lower = 1
        above = filling.get((i - 1, j))
        if above is not None:
            lower = above + 1
        total = 0
        for value in range(lower, upper + 1):
            if counts[value] + 1 > mu[value - 1]:
                continue
            if value > 1 and counts[value] + 1 > counts[value - 1]:
                continue
            counts[value] += 1
            filling[(i, j)] = value
            total += fill(k + 1)
            del filling[(i, j)]
            counts[value] -= 1
        return total

    return fill(0)


def lr_coefficient(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    """Multiplicity of S^nu in Ind(S^lam (x) S^mu), via LR tableaux of shape nu/lam."""
    return _lr(as_parts(lam), as_parts(mu), as_parts(nu))


def induction_product(alpha: PartitionLike, beta: PartitionLike) -> Dict[Parts, int]:
    """nu -> c^nu_{alpha, beta} for every nu with a nonzero coefficient."""
    a, b = as_parts(alpha), as_parts(beta)
    product = {}
    for nu in _partitions(sum(a) + sum(b), sum(a) + sum(b)):
        c = _lr(a, b, nu)
        if c:
            product[nu] = c
    return product


def restriction_pairs(value: PartitionLike, first: int) -> Dict[Tuple[Parts, Parts], int]:
    """(alpha, beta) -> c^lam_{alpha, beta} with |alpha| = first."""
    parts = as_parts(value)
    second = sum(parts) - first
    pairs = {}
    if second < 0 or first < 0:
        return pairs
    for alpha in _partitions(first, first):
        for beta in _partitions(second, second):
            c = _lr(alpha, beta, parts)
            if c:
                pairs[(alpha, beta)] = c
    return pairs


@lru_cache(maxsize=None)
def _mn(lam: Parts, rho: Parts) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    m = len(lam)
    betas = [lam[i] + m - 1 - i for i in range(m)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        target = b - k
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for c in betas if target < c < b)
        moved = sorted((beta_set - {b}) | {target}, reverse=True)
        shape = tuple(moved[i] - (m - 1 - i) for i in range(m))
        total += (-1) ** height * _mn(tuple(p for p in shape if p), rest)
    return total


def mn_character(lam: PartitionLike, cycle_type: PartitionLike) -> int:
    """
    Character value chi^lam at a permutation of the given cycle type.

    Raises:
        SizeMismatch: If the two partitions have different sizes.
    """
    a, rho = as_parts(lam), as_parts(cycle_type)
    if sum(a) != sum(rho):
        raise SizeMismatch(f"|{a}| != |{rho}|")
    return _mn(a, rho)


def centralizer_order(cycle_type: PartitionLike) -> int:
    rho = as_parts(cycle_type)
    order = 1
    for part in set(rho):
        multiplicity = rho.count(part)
        order *= part ** multiplicity * factorial(multiplicity)
    return order


def lr_via_characters(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    """The LR coefficient as a character inner product over Σ_a x Σ_b."""
    a, b, c = as_parts(lam), as_parts(mu), as_parts(nu)
    if sum(c) != sum(a) + sum(b):
        return 0
    total = Fraction(0)
    for alpha in _partitions(sum(a), sum(a)):
        chi_a = _mn(a, alpha)
        if not chi_a:
            continue
        for beta in _partitions(sum(b), sum(b)):
            chi_b = _mn(b, beta)
            if not chi_b:
                continue
            merged = tuple(sorted(alpha + beta, reverse=True))
            total += Fraction(_mn(c, merged) * chi_a * chi_b, centralizer_order(alpha) * centralizer_order(beta))
    if total.denominator != 1:
        logger.error(f"Character inner product for {a},{b},{c} is not integral: {total}")
    return int(total)
