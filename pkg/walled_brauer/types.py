from fractions import Fraction
from typing import Any, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from walled_brauer.errors import DegenerateDelta, InfeasibleTuple, ShapeMismatch


class Partition(BaseModel):
    """Weakly decreasing tuple of positive parts; () is the empty partition."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p <= 0 for p in parts):
            raise ValueError(f"Partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        return parts

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        # reverse-lexicographic: (3) < (2,1) < (1,1,1)
        return tuple(-p for p in self.parts)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    def __str__(self) -> str:
        return f"({self.to_text()})" if self.parts else "∅"


EMPTY = Partition()


class SplitShape(BaseModel):
    """
    Split of B_{r,s} into B_{r1,s1} (outer blocks) and B_{r2,s2} (inner blocks).

    Block layout on one row of r+s dots:
        A = 1..r1 | B = r1+1..r || C = r+1..r+s2 | D = r+s2+1..r+s
    """

    model_config = ConfigDict(frozen=True)

    r1: int
    s1: int
    r2: int
    s2: int

    @field_validator("r1", "s1", "r2", "s2")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"Block sizes must be nonnegative, got {value}")
        return value

    @property
    def r(self) -> int:
        return self.r1 + self.r2

    @property
    def s(self) -> int:
        return self.s1 + self.s2

    def block_of(self, position: int) -> str:
        """Name of the block holding a one-row position."""
        if position <= self.r1:
            return "A"
        if position <= self.r:
            return "B"
        if position <= self.r + self.s2:
            return "C"
        return "D"

    def swapped(self) -> "SplitShape":
        return SplitShape(r1=self.r2, s1=self.s2, r2=self.r1, s2=self.s1)

    def to_text(self) -> str:
        return f"{self.r1},{self.s1}|{self.r2},{self.s2}"

    def __str__(self) -> str:
        return self.to_text()


class ArcTuple(BaseModel):
    """Arc counts between blocks: A-C, B-D, A-D, B-C."""

    model_config = ConfigDict(frozen=True)

    t_ac: int = 0
    t_bd: int = 0
    t_ad: int = 0
    t_bc: int = 0

    @property
    def total(self) -> int:
        return self.t_ac + self.t_bd + self.t_ad + self.t_bc

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        return (self.t_ac, self.t_bd, -self.t_ad, -self.t_bc)

    def is_feasible(self, shape: SplitShape) -> bool:
        values = (self.t_ac, self.t_bd, self.t_ad, self.t_bc)
        return (
            min(values) >= 0
            and self.t_ad + self.t_ac <= shape.r1
            and self.t_bc + self.t_bd <= shape.r2
            and self.t_ad + self.t_bd <= shape.s1
            and self.t_bc + self.t_ac <= shape.s2
        )

    def require_feasible(self, shape: SplitShape) -> None:
        if not self.is_feasible(shape):
            raise InfeasibleTuple(f"Tuple {self.as_tuple()} does not fit shape {shape}")

    def swapped(self) -> "ArcTuple":
        """The tuple seen from the swapped shape."""
        return ArcTuple(t_ac=self.t_bd, t_bd=self.t_ac, t_ad=self.t_bc, t_bc=self.t_ad)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.t_ac, self.t_bd, self.t_ad, self.t_bc)


class CellLabel(BaseModel):
    """Index (l, lamL, lamR) of the cell module V^l (x) (S^lamL [x] S^lamR)."""

    model_config = ConfigDict(frozen=True)

    l: int
    lam_l: Partition = EMPTY
    lam_r: Partition = EMPTY

    @field_validator("l")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"Arc count must be nonnegative, got {value}")
        return value

    @property
    def r(self) -> int:
        return self.l + self.lam_l.size

    @property
    def s(self) -> int:
        return self.l + self.lam_r.size

    @property
    def sort_key(self) -> Tuple[Any, ...]:
        return (self.l, self.lam_l.sort_key, self.lam_r.sort_key)

    def belongs_to(self, r: int, s: int) -> bool:
        return self.r == r and self.s == s

    def require(self, r: int, s: int) -> None:
        if not self.belongs_to(r, s):
            raise ShapeMismatch(f"Cell {self.to_text()} is not a cell of B_{{{r},{s}}}")

    def to_text(self) -> str:
        return f"{self.lam_l.to_text()};{self.lam_r.to_text()};l={self.l}"

    def __str__(self) -> str:
        return f"[{self.lam_l}, {self.lam_r}; l={self.l}]"


class RestrictionTerm(BaseModel):
    """One constituent Δ(cell1) ⊗ Δ(cell2) of a restricted cell module."""

    model_config = ConfigDict(frozen=True)

    cell1: CellLabel
    cell2: CellLabel
    multiplicity: int

    @field_validator("multiplicity")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"Multiplicity must be positive, got {value}")
        return value


class GenericDelta(BaseModel):
    """A rational stand-in for a generic loop parameter."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Fraction

    @field_validator("value", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Fraction:
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    @model_validator(mode="after")
    def _avoid_small_integers(self) -> "GenericDelta":
        if self.value.denominator == 1 and -8 <= self.value.numerator <= 8:
            raise DegenerateDelta(f"δ0 = {self.value} is a small integer and may be degenerate")
        return self

    def next(self) -> "GenericDelta":
        """Deterministic fallback value used when a check looks degenerate."""
        return GenericDelta(value=self.value * 2 + Fraction(1, 3))

    def __str__(self) -> str:
        return str(self.value)


