"""
Laurent polynomials in the loop parameter delta.

Coefficients are exact ``Fraction`` values; negative exponents are
allowed because the idempotents of the cellular structure carry a
``delta**-l`` prefactor.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from walled_brauer.errors import WalledBrauerError

Scalar = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """
    Parse ``"p"`` or ``"p/q"`` into a Fraction.

    Raises:
        WalledBrauerError: If the text is not a rational literal.
    """
    cleaned = str(text).strip()
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError):
        raise WalledBrauerError(f"Not a rational number: {text!r}")


def format_rational(value: Fraction) -> str:
    """Render as ``"num/den"`` (denominator always present)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class LaurentPoly:
    """
    Immutable finite sum of ``c * delta**k``.

    Terms are kept sorted by exponent with no zero coefficients, so
    structural equality is polynomial equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Dict[int, Scalar], Iterable[Tuple[int, Scalar]], None] = None):
        collected: Dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for exponent, coeff in items:
            exponent = int(exponent)
            collected[exponent] = collected.get(exponent, Fraction(0)) + Fraction(coeff)
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(
            (k, c) for k, c in sorted(collected.items()) if c != 0
        )
        self._hash = hash(self._terms)

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def delta_power(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @property
    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return self._terms

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise WalledBrauerError("The zero polynomial has no degree")
        return self._terms[0][0]

    def max_degree(self) -> int:
        if not self._terms:
            raise WalledBrauerError("The zero polynomial has no degree")
        return self._terms[-1][0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        return lp_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([(k, -c) for k, c in self._terms])

    def __sub__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        return lp_add(self, -_coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return lp_add(_coerce(other), -self)

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        return lp_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __call__(self, delta0: Scalar) -> Fraction:
        return lp_eval(self, delta0)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for exponent, coeff in reversed(self._terms):
            if exponent == 0:
                body = str(coeff)
            else:
                power = "δ" if exponent == 1 else f"δ^{exponent}"
                if coeff == 1:
                    body = power
                elif coeff == -1:
                    body = f"-{power}"
                else:
                    body = f"{coeff}{power}"
            pieces.append(body)
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text


def _coerce(value: Union[LaurentPoly, Scalar]) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    raise TypeError(f"Cannot use {type(value).__name__} as a Laurent coefficient")


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Coefficient-wise sum; zero terms vanish."""
    return LaurentPoly(list(a.terms) + list(b.terms))


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact convolution product."""
    product: Dict[int, Fraction] = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            product[ea + eb] = product.get(ea + eb, Fraction(0)) + ca * cb
    return LaurentPoly(product)


def lp_eval(a: LaurentPoly, delta0: Scalar) -> Fraction:
    """
    Evaluate at a rational point.

    Raises:
        ZeroDivisionError: If delta0 is zero and ``a`` has a negative power.
    """
    x = Fraction(delta0)
    total = Fraction(0)
    for exponent, coeff in a.terms:
        if exponent < 0 and x == 0:
            raise ZeroDivisionError(f"δ^{exponent} has a pole at δ = 0")
        total += coeff * x ** exponent
    return total


def lp_to_json(a: LaurentPoly) -> List[List[Union[int, str]]]:
    """``[[exponent, "num/den"], ...]`` sorted by exponent."""
    return [[k, format_rational(c)] for k, c in a.terms]


def lp_from_json(payload: Iterable) -> LaurentPoly:
    terms = []
    for entry in payload:
        if len(entry) != 2:
            raise WalledBrauerError(f"Bad Laurent term: {entry!r}")
        exponent, coeff = entry
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise WalledBrauerError(f"Exponent must be an integer: {exponent!r}")
        terms.append((exponent, parse_rational(coeff)))
    return LaurentPoly(terms)
