"""Combinatorial model of (rational) open book decompositions.

A book records its page topology (genus and boundary circle count), the
Seifert data of each binding component, and optionally a monodromy word.
Binding data lives in a chosen framing: the page approaches a component of
order r as an (r, s)-curve, so the Seifert slope is s/r and gcd(r, s)
boundary circles of the page lie on that component.  Integral components
have r = 1, and in the page framing s = 0.

Values are immutable; operations return new books.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Optional

from .slopes import Slope
from .words import Generator, TwistWord


class OpenBookError(ValueError):
    pass


@dataclass(frozen=True)
class BindingComponent:
    """One binding component: page meets it as an (order, seifert_numerator)-curve."""

    order: int
    seifert_numerator: int
    multiplicity: int = 0  # 0 = compute from (order, numerator)

    def __post_init__(self):
        if self.order < 1:
            raise OpenBookError(f"order must be positive, got {self.order}")
        if self.multiplicity == 0:
            m = gcd(self.order, abs(self.seifert_numerator))
            if self.seifert_numerator == 0:
                m = 1
            object.__setattr__(self, "multiplicity", m)

    @property
    def seifert_slope(self) -> Slope:
        return Slope(self.seifert_numerator, self.order)

    @property
    def is_integral(self) -> bool:
        return self.order == 1

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "seifert_numerator": self.seifert_numerator,
            "multiplicity": self.multiplicity,
        }

    @staticmethod
    def from_json(obj: dict) -> "BindingComponent":
        return BindingComponent(
            order=obj["order"],
            seifert_numerator=obj["seifert_numerator"],
            multiplicity=obj.get("multiplicity", 0),
        )


def reframe(c: BindingComponent, k: int) -> BindingComponent:
    """Shift the framing longitude: the Seifert numerator moves by k * order."""
    return BindingComponent(
        order=c.order,
        seifert_numerator=c.seifert_numerator + k * c.order,
        multiplicity=c.multiplicity,
    )


def normalize_to_window(c: BindingComponent) -> BindingComponent:
    """Reframe so that -order < seifert_numerator <= 0.  Idempotent."""
    r, s = c.order, c.seifert_numerator
    # s + k*r in (-r, 0]  <=>  k = -ceil(s/r) = -((s + r - 1) // r)
    k = -((s + r - 1) // r)
    return reframe(c, k)


@dataclass(frozen=True)
class RationalOpenBook:
    """Page topology plus per-component binding data and an optional word."""

    genus: int
    components: tuple[BindingComponent, ...]
    boundary_count_of_page: int = 0  # 0 = compute as the multiplicity total
    is_rational_unknot_book: bool = False
    monodromy: Optional[TwistWord] = None
    metadata: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.boundary_count_of_page == 0:
            object.__setattr__(
                self,
                "boundary_count_of_page",
                sum(c.multiplicity for c in self.components),
            )

    @property
    def page_euler_char(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count_of_page

    @property
    def is_integral(self) -> bool:
        return all(c.is_integral for c in self.components)

    @property
    def has_connected_binding(self) -> bool:
        return len(self.components) == 1

    def with_monodromy(self, word: Optional[TwistWord]) -> "RationalOpenBook":
        return replace(self, monodromy=word)

    def with_metadata(self, **notes: str) -> "RationalOpenBook":
        merged = dict(self.metadata)
        merged.update(notes)
        return replace(self, metadata=tuple(sorted(merged.items())))

    def to_json(self) -> dict:
        obj = {
            "genus": self.genus,
            "components": [c.to_json() for c in self.components],
            "boundary_count_of_page": self.boundary_count_of_page,
            "rational_unknot": self.is_rational_unknot_book,
        }
        if self.monodromy is not None:
            obj["monodromy"] = self.monodromy.to_json()
        if self.metadata:
            obj["metadata"] = dict(self.metadata)
        return obj

    @staticmethod
    def from_json(obj: dict) -> "RationalOpenBook":
        word = None
        if obj.get("monodromy") is not None:
            word = TwistWord.from_json(obj["monodromy"])
        return RationalOpenBook(
            genus=obj["genus"],
            components=tuple(BindingComponent.from_json(c) for c in obj["components"]),
            boundary_count_of_page=obj.get("boundary_count_of_page", 0),
            is_rational_unknot_book=obj.get("rational_unknot", False),
            monodromy=word,
            metadata=tuple(sorted(obj.get("metadata", {}).items())),
        )


def validate(book: RationalOpenBook) -> list[str]:
    """Return invariant violations as strings; an empty list means valid."""
    problems = []
    if book.genus < 0:
        problems.append(f"negative genus {book.genus}")
    if not book.components:
        problems.append("no binding components")
    mult_total = sum(c.multiplicity for c in book.components)
    if book.boundary_count_of_page != mult_total:
        problems.append(
            "boundary count mismatch: page has "
            f"{book.boundary_count_of_page} boundary circles but component "
            f"multiplicities total {mult_total}"
        )
    for i, c in enumerate(book.components):
        expected = 1 if c.seifert_numerator == 0 else gcd(c.order, abs(c.seifert_numerator))
        if c.multiplicity != expected:
            problems.append(
                f"component {i}: multiplicity {c.multiplicity} != gcd-rule value {expected}"
            )
    if book.is_rational_unknot_book and (
        book.genus != 0 or book.boundary_count_of_page != 1
    ):
        problems.append("rational unknot flag requires a disk page")
    return problems


def page_euler_char(book: RationalOpenBook) -> int:
    return book.page_euler_char


def positive_stabilize(
    book: RationalOpenBook,
    component_index: int,
    mode: str = "same",
    join_index: Optional[int] = None,
    curve_name: Optional[str] = None,
) -> RationalOpenBook:
    """Plumb a positive Hopf band to the page along an embedded arc.

    mode "same": the arc has both endpoints on (the boundary circle of) one
    integral component; the page boundary splits, so the book gains a fresh
    integral component and keeps its genus.  mode "join": the arc runs
    between two integral components, which merge; genus goes up by one.
    Either way the page Euler characteristic drops by exactly 1, and a
    monodromy word, when present, gains one right-handed twist about the
    new curve (arc plus handle core), appended so it acts first.
    """
    comps = list(book.components)
    if not (0 <= component_index < len(comps)):
        raise OpenBookError(f"no component {component_index}")
    c = comps[component_index]
    if not c.is_integral or c.multiplicity != 1:
        raise OpenBookError("stabilization arcs require an integral component")
    fresh = BindingComponent(order=1, seifert_numerator=0)
    if mode == "same":
        comps.append(fresh)
        genus = book.genus
    elif mode == "join":
        if join_index is None or not (0 <= join_index < len(comps)):
            raise OpenBookError("join mode needs a valid second component index")
        if join_index == component_index:
            raise OpenBookError("join mode needs two distinct components")
        other = comps[join_index]
        if not other.is_integral or other.multiplicity != 1:
            raise OpenBookError("stabilization arcs require an integral component")
        comps = [x for i, x in enumerate(comps) if i not in (component_index, join_index)]
        comps.append(fresh)
        genus = book.genus + 1
    else:
        raise OpenBookError(f"unknown stabilization mode {mode!r}")

    word = book.monodromy
    if word is not None:
        name = curve_name or f"stab{len(word)}"
        word = word.append(Generator.dehn_twist(name, +1))
    return RationalOpenBook(
        genus=genus,
        components=tuple(comps),
        is_rational_unknot_book=False,
        monodromy=word,
        metadata=book.metadata,
    )
