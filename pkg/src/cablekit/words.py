"""Signed generator words for surface mapping classes.

A word is a finite sequence of generators in functional order: the list
reads left to right as a composition, so the rightmost entry acts first.
Generators are right- or left-handed Dehn twists about named curves,
fractional boundary twists, braid half twists awaiting a lift, and positive
stabilization markers (bookkeeping for plumbed Hopf bands whose arcs are
chosen implicitly).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

DEHN = "dehn"
FRACTIONAL = "fractional"
BRAID_HALF = "braid_half"
STAB = "stab"

_KINDS = (DEHN, FRACTIONAL, BRAID_HALF, STAB)


@dataclass(frozen=True)
class Generator:
    kind: str
    curve: str
    sign: int = 1
    amount: Optional[Fraction] = None  # fractional twists only; sign included

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == FRACTIONAL:
            if self.amount is None or self.amount == 0:
                raise ValueError("fractional twist needs a nonzero amount")
        elif self.sign not in (1, -1):
            raise ValueError(f"sign must be +-1, got {self.sign}")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def dehn_twist(curve: str, sign: int = 1) -> "Generator":
        return Generator(DEHN, curve, sign)

    @staticmethod
    def fractional_boundary(boundary: str, amount: Fraction) -> "Generator":
        """Right-handed (amount > 0) fractional twist along a boundary collar."""
        amount = Fraction(amount)
        return Generator(FRACTIONAL, boundary, 1 if amount > 0 else -1, amount)

    @staticmethod
    def braid_half_twist(ref: str, sign: int = 1) -> "Generator":
        return Generator(BRAID_HALF, ref, sign)

    @staticmethod
    def stabilization_marker(ref: str, sign: int = 1) -> "Generator":
        return Generator(STAB, ref, sign)

    # -- algebra -------------------------------------------------------------

    def inverse(self) -> "Generator":
        if self.kind == FRACTIONAL:
            return Generator(FRACTIONAL, self.curve, -self.sign, -self.amount)
        return Generator(self.kind, self.curve, -self.sign)

    def is_inverse_of(self, other: "Generator") -> bool:
        return self.inverse() == other

    def __str__(self) -> str:
        if self.kind == DEHN:
            return f"D_{self.curve}" + ("" if self.sign == 1 else "^-1")
        if self.kind == FRACTIONAL:
            return f"delta_{{{self.amount}}}({self.curve})"
        if self.kind == BRAID_HALF:
            return f"s_{self.curve}" + ("" if self.sign == 1 else "^-1")
        return f"stab({self.curve})" + ("" if self.sign == 1 else "^-1")

    def to_json(self) -> dict:
        obj = {"kind": self.kind, "curve": self.curve, "sign": self.sign}
        if self.amount is not None:
            obj["amount"] = f"{self.amount.numerator}/{self.amount.denominator}"
        return obj

    @staticmethod
    def from_json(obj: dict) -> "Generator":
        amount = None
        if obj.get("amount") is not None:
            num, den = str(obj["amount"]).split("/")
            amount = Fraction(int(num), int(den))
        return Generator(obj["kind"], obj["curve"], obj.get("sign", 1), amount)


@dataclass(frozen=True)
class TwistWord:
    """An ordered product of generators; the rightmost acts first."""

    generators: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    @staticmethod
    def of(*gens: Generator) -> "TwistWord":
        return TwistWord(gens)

    @staticmethod
    def twists(*signed_curves) -> "TwistWord":
        """Build from ("curve", sign) pairs or bare curve names (sign +1)."""
        gens = []
        for item in signed_curves:
            if isinstance(item, str):
                gens.append(Generator.dehn_twist(item, 1))
            else:
                name, sign = item
                gens.append(Generator.dehn_twist(name, sign))
        return TwistWord(tuple(gens))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def append(self, gen: Generator) -> "TwistWord":
        """Precompose: the new generator acts before the existing word."""
        return TwistWord(self.generators + (gen,))

    def compose(self, other: "TwistWord") -> "TwistWord":
        """self after other: other acts first."""
        return TwistWord(self.generators + other.generators)

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return self.compose(other)

    def power(self, n: int) -> "TwistWord":
        if n < 0:
            return self.inverse().power(-n)
        return TwistWord(self.generators * n)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple(g.inverse() for g in reversed(self.generators)))

    def count(self, kind: Optional[str] = None, sign: Optional[int] = None) -> int:
        n = 0
        for g in self.generators:
            if kind is not None and g.kind != kind:
                continue
            if sign is not None and g.sign != sign:
                continue
            n += 1
        return n

    def is_positive(self, ignore: Iterable[str] = ()) -> bool:
        """True when every generator outside `ignore` (curve names) is positive."""
        skip = set(ignore)
        return all(g.sign > 0 for g in self.generators if g.curve not in skip)

    def __str__(self) -> str:
        if not self.generators:
            return "id"
        return " o ".join(str(g) for g in self.generators)

    def to_json(self) -> list:
        return [g.to_json() for g in self.generators]

    @staticmethod
    def from_json(obj: list) -> "TwistWord":
        return TwistWord(tuple(Generator.from_json(g) for g in obj))


EMPTY_WORD = TwistWord(())
