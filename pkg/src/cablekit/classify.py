"""Contact-structure verdicts for cablings of open books.

The decision rules: cabling every component positively (with the same sign
of p throughout) preserves the supported contact structure, or reverses its
coorientation when the p's are negative; a negative cable on a component
with |p| > 1 gives at best a virtually overtwisted structure, and is
overtwisted outright whenever its slope is not one of the finitely many
exceptional slopes of that component (or whenever p and q share a factor).
Rational unknots are the lone exception: a negative cable with rq - ps = -1
is again a rational unknot binding a tight structure.

Page bookkeeping: cabled pages for integral books assemble |p| copies of
the page with torus-link fiber pieces; resolutions of rational components
glue one page copy to the local fiber of a lens-space torus link computed
from the fiber invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional

from . import lens
from .openbook import BindingComponent, OpenBookError, RationalOpenBook, normalize_to_window
from .slopes import Slope, exceptional_slopes, farey_neighbors
from .words import Generator, TwistWord


class CableError(ValueError):
    pass


class VerdictKind(Enum):
    SAME_CONTACT = "SameContact"
    REVERSED_CONTACT = "ReversedContact"
    OVERTWISTED = "Overtwisted"
    VIRTUALLY_OVERTWISTED_OR_OVERTWISTED = "VirtuallyOvertwistedOrOvertwisted"
    EXCEPTIONAL_TIGHT_POSSIBLE = "ExceptionalTightPossible"
    RATIONAL_UNKNOT_CABLE = "RationalUnknotCable"


class CableSign(Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    EQUALS_SEIFERT = "EqualsSeifert"
    EQUALS_MERIDIAN = "EqualsMeridian"


@dataclass(frozen=True)
class CableCoefficients:
    """One (p, q) pair per binding component, validated against the book."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(p), int(q)) for p, q in self.pairs))

    def validate(self, book: RationalOpenBook) -> None:
        if len(self.pairs) != len(book.components):
            raise CableError(
                f"{len(self.pairs)} pairs for {len(book.components)} components"
            )
        signs = {p > 0 for p, _ in self.pairs}
        if any(p == 0 for p, _ in self.pairs):
            raise CableError("meridional cables (p = 0) are excluded")
        if len(signs) > 1:
            raise CableError("all cable p's must share one sign")
        for (p, q), comp in zip(self.pairs, book.components):
            if Slope(q, p) == comp.seifert_slope:
                raise CableError(
                    f"cable slope {q}/{p} equals the Seifert slope "
                    f"{comp.seifert_slope} and destroys the fibration"
                )

    @staticmethod
    def parse(text: str) -> "CableCoefficients":
        """Parse "p,q;p,q;..."."""
        pairs = []
        for chunk in text.split(";"):
            p, q = chunk.split(",")
            pairs.append((int(p), int(q)))
        return CableCoefficients(tuple(pairs))


@dataclass(frozen=True)
class CableVerdict:
    kind: VerdictKind
    per_component_signs: tuple[CableSign, ...]
    hopf_delta: Optional[int] = None
    lutz_recipe: Optional[str] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "per_component_signs": [s.value for s in self.per_component_signs],
            "hopf_delta": self.hopf_delta,
            "lutz_recipe": self.lutz_recipe,
            "note": self.note,
        }


def cable_sign(cable: Slope, seifert: Slope) -> CableSign:
    if cable.is_meridian:
        return CableSign.EQUALS_MERIDIAN
    if cable == seifert:
        return CableSign.EQUALS_SEIFERT
    return CableSign.POSITIVE if cable > seifert else CableSign.NEGATIVE


def hopf_delta(p: int, q: int, genus: int) -> int:
    """Change of the Hopf invariant under a negative (p, q)-cable of an
    integral connected binding: (1 - |p|)(2*genus + |q| - 1).

    A genus-0 connected integral binding is the unknot; its (p, -sgn p)
    cables are unknots again and fall outside the formula."""
    if genus < 0:
        raise CableError("genus must be nonnegative")
    if abs(p) == 1:
        return 0
    if p * q >= 0:
        raise CableError("positive cables do not shift the Hopf invariant")
    if genus == 0 and q == (-1 if p > 0 else 1):
        raise CableError("the unknot with q = -sgn(p) stays an unknot; no delta")
    return (1 - abs(p)) * (2 * genus + abs(q) - 1)


def _normalized_pair(comp: BindingComponent, p: int, q: int) -> tuple[int, int, int]:
    """Reframe so the Seifert numerator lies in (-order, 0]; the cable
    coefficient shifts alongside: (p, q) -> (p, q + k*p)."""
    r, s = comp.order, comp.seifert_numerator
    k = -((s + r - 1) // r)
    return r, s + k * r, q + k * p


def classify_cable(book: RationalOpenBook, coeffs: CableCoefficients) -> CableVerdict:
    coeffs.validate(book)
    pairs = coeffs.pairs
    if pairs and pairs[0][0] < 0:
        mirrored = classify_cable(
            book, CableCoefficients(tuple((-p, -q) for p, q in pairs))
        )
        swap = {
            VerdictKind.SAME_CONTACT: VerdictKind.REVERSED_CONTACT,
            VerdictKind.REVERSED_CONTACT: VerdictKind.SAME_CONTACT,
        }
        return CableVerdict(
            kind=swap.get(mirrored.kind, mirrored.kind),
            per_component_signs=mirrored.per_component_signs,
            hopf_delta=mirrored.hopf_delta,
            lutz_recipe=mirrored.lutz_recipe.replace("of (xi)", "of (-xi)")
            if mirrored.lutz_recipe
            else None,
            note=mirrored.note,
        )

    signs = tuple(
        cable_sign(Slope(q, p), comp.seifert_slope)
        for (p, q), comp in zip(pairs, book.components)
    )
    negatives = [
        i
        for i, ((p, q), sign) in enumerate(zip(pairs, signs))
        if sign is CableSign.NEGATIVE and abs(p) != 1
    ]

    integral_connected = book.is_integral and book.has_connected_binding

    if not negatives:
        delta = 0 if integral_connected else None
        return CableVerdict(VerdictKind.SAME_CONTACT, signs, hopf_delta=delta)

    # rational unknot exception: a negative cable at a Farey neighbor of the
    # Seifert slope gives another rational unknot, hence stays tight
    if book.is_rational_unknot_book and len(negatives) == 1:
        i = negatives[0]
        p, q = pairs[i]
        comp = book.components[i]
        r, s = comp.order, comp.seifert_numerator
        if r * q - p * s == -1:
            assert farey_neighbors(Slope(q, p), Slope(s, r))
            return CableVerdict(
                VerdictKind.RATIONAL_UNKNOT_CABLE,
                signs,
                note="negative cable of a rational unknot along a Farey "
                "neighbor of the Seifert slope; the cable is again a "
                "rational unknot and the structure stays tight",
            )

    exceptional = []
    for i in negatives:
        p, q = pairs[i]
        if gcd(abs(p), abs(q)) > 1:
            exceptional = None  # non-coprime negative cable: overtwisted
            break
        r, s_norm, q_norm = _normalized_pair(book.components[i], p, q)
        window = Slope(s_norm, r)
        if Slope(q_norm, p) in exceptional_slopes(window):
            exceptional.append(i)
    all_exceptional = exceptional is not None and len(exceptional) == len(negatives)

    delta = None
    if integral_connected:
        p, q = pairs[0]
        genus = book.genus
        if not (genus == 0 and q == -1):
            delta = hopf_delta(p, q, genus)

    if all_exceptional:
        return CableVerdict(
            VerdictKind.EXCEPTIONAL_TIGHT_POSSIBLE,
            signs,
            hopf_delta=delta,
            note="virtually overtwisted or overtwisted; exceptional slope(s), "
            "so a tight structure is possible and is not ruled out here",
        )

    recipe = lutz_cable_description_for(book, pairs, negatives)
    return CableVerdict(
        VerdictKind.OVERTWISTED, signs, hopf_delta=delta, lutz_recipe=recipe
    )


def lutz_cable_description(book: RationalOpenBook, coeffs: CableCoefficients) -> str:
    """Recipe text when the verdict is Overtwisted; empty string otherwise."""
    verdict = classify_cable(book, coeffs)
    return verdict.lutz_recipe or ""


def lutz_cable_description_for(
    book: RationalOpenBook, pairs, negatives: list[int]
) -> str:
    side = "xi" if pairs[0][0] > 0 else "-xi"
    lines = []
    for i in negatives:
        p, q = pairs[i]
        lines.append(
            f"Lutz twist on binding component {i} of ({side}), then a Lutz "
            f"twist on each component of its ({p},{q})-Lutz cable"
        )
    return "; ".join(lines)


# -- cabled pages ------------------------------------------------------------


def cabled_page(book: RationalOpenBook, coeffs: CableCoefficients) -> RationalOpenBook:
    """Page data of the cabled book.

    Integral books cabled with one magnitude |p| across all components stay
    honest: the new page is |p| copies of the old page glued to one
    torus-link fiber piece per component (Euler characteristic |q_i| - |p
    q_i| each), and each component turns into gcd(p, q_i) integral
    components.  Books with a rational component are only supported through
    :func:`resolve`; general rational cables are out of the implemented
    envelope.
    """
    coeffs.validate(book)
    if not book.is_integral:
        raise CableError(
            "general cables of rational books are not supported; use resolve() "
            "for the (r, l)-resolution shape"
        )
    magnitudes = {abs(p) for p, _ in coeffs.pairs}
    if len(magnitudes) != 1:
        raise CableError("honest cabled pages need one |p| across components")
    p_mag = magnitudes.pop()
    chi_old = book.page_euler_char
    chi = p_mag * chi_old
    new_components = []
    for (p, q), comp in zip(coeffs.pairs, book.components):
        chi += abs(q) - abs(p * q)
        for _ in range(gcd(abs(p), abs(q))):
            new_components.append(BindingComponent(order=1, seifert_numerator=0))
    boundary = len(new_components)
    genus2 = 2 - chi - boundary
    if genus2 % 2:
        raise CableError(f"non-integral genus from chi={chi}, boundary={boundary}")
    return RationalOpenBook(
        genus=genus2 // 2,
        components=tuple(new_components),
        is_rational_unknot_book=False,
    )


def cabled_page_assembled(book: RationalOpenBook, coeffs: CableCoefficients) -> int:
    """Independent Euler characteristic via lens-space torus-link fibers:
    |p| page copies plus, per component, the local fiber of the (p, q_i)
    torus link in the three-sphere minus its |p| nodule disks."""
    coeffs.validate(book)
    if not book.is_integral:
        raise CableError("assembly cross-check is for integral books")
    p_mag = abs(coeffs.pairs[0][0])
    chi = p_mag * book.page_euler_char
    for p, q in coeffs.pairs:
        K = lens.LensTorusKnot(1, 0, p, q)
        chi += lens.euler_characteristic(K) - abs(p)
    return chi


def stabilization_count_pq_from_p1(p: int, q: int) -> tuple[int, str]:
    """(|p| - 1)(|q| - 1) stabilizations relate the (p, sgn q)- and (p, q)-
    cables; they are positive when pq > 0 and negative when pq < 0."""
    if p == 0 or q == 0:
        raise CableError("need p != 0 and q != 0")
    count = (abs(p) - 1) * (abs(q) - 1)
    return count, ("positive" if p * q > 0 else "negative")


# -- resolution --------------------------------------------------------------


@dataclass
class ResolutionData:
    book: RationalOpenBook
    new_boundary_curves: list[str] = field(default_factory=list)


def resolve(book: RationalOpenBook, l_coeffs: list[int]) -> RationalOpenBook:
    """Replace each component of order r > 1 by its (r, l)-cable, producing
    an integral book supporting the same contact structure.

    l is given in the window framing (-r < s <= 0) and must exceed the
    Seifert numerator there.  The page gains, per resolved component, the
    local torus-link fiber piece glued along the old page's boundary circles
    at that component.  When every resolved component is in (r, -1)-form
    with l = 0 and a monodromy word is present, the word is updated: the
    fractional boundary twists are replaced by one positive boundary twist
    about each new boundary component (a boundary multitwist acting first).
    """
    return _resolve_impl(book, l_coeffs).book


def _resolve_impl(book: RationalOpenBook, l_coeffs: list[int]) -> ResolutionData:
    rational = [i for i, c in enumerate(book.components) if c.order > 1]
    if len(l_coeffs) != len(rational):
        raise OpenBookError(
            f"need one l per rational component ({len(rational)}), got {len(l_coeffs)}"
        )
    chi = book.page_euler_char
    boundary = book.boundary_count_of_page
    new_components = [c for c in book.components if c.order == 1]
    multitwist_ok = True
    new_curves: list[str] = []
    for idx, l in zip(rational, l_coeffs):
        comp = normalize_to_window(book.components[idx])
        r, s, n = comp.order, comp.seifert_numerator, comp.multiplicity
        if l <= s:
            raise OpenBookError(
                f"resolution slope l={l} must exceed the Seifert numerator {s}"
            )
        if not (s == -1 and l == 0):
            multitwist_ok = False
        # local model: reframe the reduced page curve (r/n, s/n) into lens
        # position 0 <= s < r, shifting the cable coefficient l along; in the
        # window frame the shift is 0 for s = 0 and one longitude otherwise
        r_hat, s_hat = r // n, s // n
        k = 0 if s_hat == 0 else 1
        s_lens = s_hat + k * r_hat
        l_lens = l + k * r
        K = lens.LensTorusKnot(r_hat, s_lens, r, l_lens)
        chi_fiber = lens.euler_characteristic(K)
        chi += chi_fiber - n
        comps_here = gcd(r, abs(l)) if l != 0 else r
        boundary += comps_here - n
        for j in range(comps_here):
            new_components.append(BindingComponent(order=1, seifert_numerator=0))
            new_curves.append(f"rb{idx}_{j + 1}")
    genus2 = 2 - chi - boundary
    if genus2 % 2:
        raise OpenBookError(f"non-integral genus from chi={chi}, b={boundary}")
    word = None
    if book.monodromy is not None and multitwist_ok:
        kept = [g for g in book.monodromy if g.kind != "fractional"]
        word = TwistWord(
            tuple(kept) + tuple(Generator.dehn_twist(c, +1) for c in new_curves)
        )
    out = RationalOpenBook(
        genus=genus2 // 2,
        components=tuple(new_components),
        is_rational_unknot_book=False,
        monodromy=word,
        metadata=book.metadata,
    ).with_metadata(contact="unchanged by resolution (positive cables)")
    return ResolutionData(out, new_curves)


# -- surgery -----------------------------------------------------------------


def surgery_admissible(coefficient: Slope, seifert: Slope) -> bool:
    """True iff the (finite) coefficient lies below the Seifert slope."""
    if coefficient.is_meridian:
        return False
    return coefficient < seifert


def induced_open_book_from_surgery(
    book: RationalOpenBook, component_index: int, coefficient: Slope
) -> RationalOpenBook:
    """Replace a binding component by the core of the surgery torus.

    Convention: coefficient a/b kills the curve a*mu + b*lambda.  Writing
    the page curve of the component in the new meridian-longitude basis
    gives the induced component (order |a*r - b*s|, numerator from the
    unimodular change of basis, normalized into the window).  The slope
    equal to the Seifert slope is rejected: it collapses the pages.  With
    this convention the surgered book is honest exactly when |a*r - b*s| is
    1; for an integral component that reads |a| = 1, so surgery coefficient
    phrasing that tracks "p = +-1" refers to our numerator a.
    """
    comps = list(book.components)
    if not (0 <= component_index < len(comps)):
        raise OpenBookError(f"no component {component_index}")
    comp = comps[component_index]
    a, b = coefficient.numerator, coefficient.denominator
    if coefficient.is_meridian:
        raise OpenBookError("meridional surgery gives back the same book")
    r, s = comp.order, comp.seifert_numerator
    order_new = a * r - b * s
    if order_new == 0:
        raise OpenBookError(
            "surgery along the Seifert slope destroys the fibration"
        )
    # unimodular completion a*d - b*c = 1; page curve = (ar - bs) lambda' +
    # (ds - cr) mu' in the new basis (lambda', mu' = c*mu + d*lambda, a*mu + b*lambda)
    g, d, c = _ext_euclid(a, -b)
    assert a * d - b * c == 1
    s_new = d * s - c * r
    if order_new < 0:
        order_new, s_new = -order_new, -s_new
    new_comp = normalize_to_window(
        BindingComponent(order=order_new, seifert_numerator=s_new)
    )
    comps[component_index] = new_comp
    word = book.monodromy
    if word is not None and comp.is_integral and b == 1 and a < 0:
        # integer -r surgery on an integral component: the page behavior at
        # the new component is a right-handed 1/r fractional twist
        word = word.compose(
            TwistWord.of(
                Generator.fractional_boundary(
                    f"surgery_core_{component_index}", Fraction(1, -a)
                )
            )
        )
    elif word is not None:
        word = None  # no word-level description shipped for this shape
    out = RationalOpenBook(
        genus=book.genus,
        components=tuple(comps),
        is_rational_unknot_book=False,
        monodromy=word,
        metadata=book.metadata,
    )
    if surgery_admissible(coefficient, comp.seifert_slope):
        out = out.with_metadata(contact="admissible-surgery supported")
    return out


def _ext_euclid(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g."""
    old_r, rr = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while rr:
        qq = old_r // rr
        old_r, rr = rr, old_r - qq * rr
        old_x, x = x, old_x - qq * x
        old_y, y = y, old_y - qq * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y
