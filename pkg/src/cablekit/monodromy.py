"""Explicit Dehn-twist words for cable monodromies.

A (p, q)-cable page decomposes into p nodules (copies of the original page)
joined by base components; the cable monodromy is the rotation permuting
the nodules composed with the lift of the original monodromy acting on
nodule 1.  This module builds those words:

* connected binding, (p, 1): the rotation is a product of negative nodule
  boundary twists and Garside blocks of positive chain twists on the
  two-nodule sublayouts; the negative generators are exactly the boundary
  twists.
* connected binding, (2, 2): a positive word of 2g+1 twists, lifted from a
  braid with two verified factorizations.
* disconnected binding, (p, 1): a positive word of d(p-1) twists lifted
  from the band word of the unwound trivial braid.
* (p, q): the (p, sgn q) word plus (|p|-1)(|q|-1) stabilization markers.
* the negative-cable normal form for (r, -1)-books, the boundary-multitwist
  resolution word, the length obstruction for the lens spaces L(p, p-1),
  and the Stein-cobordism word gluing two monodromies into one.

Curve naming: nodule i of a connected-binding cable carries the chain
"n{i}_1", ..., "n{i}_{2g+1}"; the crossing curve between nodules j and j+1
is "x{j}"; the boundary of nodule i is "partial{i}".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .braids import (
    BraidWord,
    braid_Bp,
    garside_half_twist,
    lift_through_double_cover,
    positive_destabilization_certificate,
    r22_braid,
)
from .classify import CableCoefficients, cabled_page, stabilization_count_pq_from_p1
from .curves import (
    CurveSystem,
    chain_classes,
    extract_transvection_class,
    mat_mul,
    solve_integer_system,
    symplectic_pairing,
)
from .openbook import BindingComponent, RationalOpenBook, normalize_to_window
from .words import DEHN, FRACTIONAL, Generator, TwistWord


class MonodromyError(ValueError):
    pass


def branch_point_count(g: int, n: int) -> int:
    """Branch points of the simple cover presenting the trivial open book.

    Disconnected binding (n >= 2 boundary components): an n-fold simple
    cover of the disk branched over (2g+2) + 2(n-2) points.  Connected
    binding: the 2-fold cover branched over 2g+1 points.
    """
    if n < 1 or g < 0:
        raise MonodromyError("need g >= 0 and n >= 1")
    if n == 1:
        return 2 * g + 1
    return (2 * g + 2) + 2 * (n - 2)


# -- curve systems for connected-binding cables ------------------------------


def p1_layout(g: int, j: int) -> list[str]:
    """The chain of 4g+1 curves on the two-nodule sublayout between nodules
    j and j+1: nodule j's even chain, the crossing curve, then nodule j+1's
    even chain reversed."""
    d = 2 * g + 1
    left = [f"n{j}_{k}" for k in range(1, 2 * g + 1)]
    right = [f"n{j + 1}_{k}" for k in range(2 * g, 0, -1)]
    assert len(left) + 1 + len(right) == 2 * d - 1
    return left + [f"x{j}"] + right


def cable_p1_system(g: int, p: int) -> CurveSystem:
    """Curve system on the (p,1)-cable page of a genus-g one-boundary page.

    The page has genus p*g and one boundary.  Nodule chains carry block
    homology classes; crossing-curve classes are solved exactly from their
    intersection pattern.  Nodule boundary twists come with registered
    nonseparating chain factorizations, so mod-10 lengths can be computed.
    The result is cached and must be treated as immutable.
    """
    return _cable_p1_system_cached(g, p)


@lru_cache(maxsize=None)
def _cable_p1_system_cached(g: int, p: int) -> CurveSystem:
    if g < 1 or p < 1:
        raise MonodromyError("need g >= 1 and p >= 1")
    genus = p * g
    sys = CurveSystem(genus=genus, boundary_labels=("outer",), name=f"cable_p1_g{g}_p{p}")
    dim = 2 * genus
    block = chain_classes(2 * g + 1, g)
    nodule_curves: dict[int, list[str]] = {}
    for i in range(1, p + 1):
        names = []
        for k in range(1, 2 * g + 2):
            cls = [0] * dim
            offset = 2 * g * (i - 1)
            for t, x in enumerate(block[k - 1]):
                cls[offset + t] = x
            name = f"n{i}_{k}"
            sys.add_curve(name, cls)
            names.append(name)
        nodule_curves[i] = names
    # crossing curves: pair once with the last even-chain curve of each
    # neighboring nodule, zero with all other nodule curves
    spanning = [f"n{i}_{k}" for i in range(1, p + 1) for k in range(1, 2 * g + 1)]
    for j in range(1, p):
        rows, rhs = [], []
        for name in spanning:
            u = sys.curve(name).homology
            rows.append(_pairing_row(u))
            if name == f"n{j}_{2 * g}":
                rhs.append(-1)
            elif name == f"n{j + 1}_{2 * g}":
                rhs.append(1)
            else:
                rhs.append(0)
        cls = solve_integer_system(rows, rhs)
        sys.add_curve(f"x{j}", cls)
    for i in range(1, p + 1):
        sys.add_curve(f"partial{i}", (0,) * dim, nonseparating=False)
    sys.add_boundary_curves()
    # recorded data: layout chains and nodule disjointness
    for j in range(1, p):
        layout = p1_layout(g, j)
        for a_idx, a in enumerate(layout):
            for b in layout[a_idx + 1 :]:
                want = 1 if layout.index(b) == a_idx + 1 else 0
                sys.record_intersection(a, b, want)
    for i in range(1, p + 1):
        for k in range(1, 2 * g + 2):
            sys.record_intersection(f"partial{i}", f"n{i}_{k}", 0)
        for j in range(1, p):
            sys.record_intersection(f"partial{i}", f"x{j}", 0)
        for i2 in range(i + 1, p + 1):
            sys.record_intersection(f"partial{i}", f"partial{i2}", 0)
            for k in range(1, 2 * g + 2):
                for k2 in range(1, 2 * g + 2):
                    sys.record_intersection(f"n{i}_{k}", f"n{i2}_{k2}", 0)
    sys.check()
    # nodule boundary twists factor through the even chain
    for i in range(1, p + 1):
        chain = TwistWord.twists(*[f"n{i}_{k}" for k in range(1, 2 * g + 1)])
        sys.register_expansion(f"partial{i}", chain.power(4 * g + 2))
    if g == 1 and p == 2:
        # page boundary twist through the even chain of the whole surface
        full = TwistWord.twists("n1_1", "n1_2", "x1", "n2_2")
        sys.register_expansion("bdry_outer", full.power(10))
    return sys


def _pairing_row(u: Sequence[int]) -> list[int]:
    """Row vector so that row . x = symplectic_pairing(x, u)."""
    row = [0] * len(u)
    for i in range(0, len(u), 2):
        row[i] = u[i + 1]
        row[i + 1] = -u[i]
    return row


def garside_block(chain: Sequence[str]) -> TwistWord:
    """(D_m) o (D_{m-1} D_m) o ... o (D_1 ... D_m) over the chain curves."""
    names: list[str] = []
    m = len(chain)
    for start in range(m - 1, -1, -1):
        names.extend(chain[start:])
    return TwistWord.twists(*names)


def rho_p1_rotation(g: int, p: int) -> TwistWord:
    """The rotation word of the connected-binding (p,1)-cable: leading
    negative nodule boundary twists, then one block per adjacent nodule
    pair, each a negative boundary twist followed by the positive Garside
    block of its layout chain."""
    if p == 1:
        return TwistWord(())
    gens: list[Generator] = []
    for j in range(p, 1, -1):
        gens.append(Generator.dehn_twist(f"partial{j}", -1))
    for j in range(1, p):
        gens.append(Generator.dehn_twist(f"partial{j}", -1))
        gens.extend(garside_block(p1_layout(g, j)).generators)
    return TwistWord(tuple(gens))


def lift_to_nodule(word: TwistWord, nodule: int = 1) -> TwistWord:
    """Rename a monodromy word over the abstract page chain c1..c{2g+1} to
    the nodule's curves.  Other generator kinds pass through unchanged."""
    out = []
    for gen in word:
        if gen.kind == DEHN and gen.curve.startswith("c") and gen.curve[1:].isdigit():
            out.append(Generator(DEHN, f"n{nodule}_{gen.curve[1:]}", gen.sign))
        else:
            out.append(gen)
    return TwistWord(tuple(out))


@dataclass
class CableWord:
    word: TwistWord
    system: Optional[CurveSystem]
    book: RationalOpenBook
    notes: dict = field(default_factory=dict)


def _require_integral_connected(book: RationalOpenBook) -> None:
    if not book.is_integral or not book.has_connected_binding:
        raise MonodromyError("this word needs an integral book with connected binding")


def monodromy_p1_connected(book: RationalOpenBook, p: int) -> CableWord:
    """The (p,1)-cable monodromy of an integral open book with connected
    binding: rotation word (negative twists exactly at the nodule
    boundaries) composed with the lift of the monodromy on nodule 1."""
    _require_integral_connected(book)
    if p < 1:
        raise MonodromyError("need p >= 1")
    g = book.genus
    if g < 1:
        raise MonodromyError("disk and annulus pages have no chain model here")
    phi = lift_to_nodule(book.monodromy or TwistWord(()))
    if p == 1:
        return CableWord(phi, cable_p1_system(g, 1), book)
    word = rho_p1_rotation(g, p).compose(phi)
    system = cable_p1_system(g, p)
    cp = cabled_page(book, CableCoefficients(((p, 1),)))
    return CableWord(word, system, cp)


def monodromy_p1_disconnected(book: RationalOpenBook, p: int) -> CableWord:
    """The (p,1)-cable monodromy for disconnected binding: the positive
    word of d(p-1) twists lifted from the band word of the unwound braid,
    then the lift of the monodromy on nodule 1.

    Curves are named c{row}_{j} after the band between nodule rows; no
    homology model ships for simple covers of degree above two, so the
    system slot is empty and only combinatorial invariants are testable.
    """
    if not book.is_integral:
        raise MonodromyError("cable words are built for integral books")
    n = len(book.components)
    if n < 2:
        raise MonodromyError("connected binding: use monodromy_p1_connected")
    if p < 1:
        raise MonodromyError("need p >= 1")
    d = branch_point_count(book.genus, n)
    gens: list[Generator] = []
    for row in range(1, p):
        for j in range(d, 0, -1):
            gens.append(Generator.dehn_twist(f"c{row}_{j}", +1))
    phi = lift_to_nodule(book.monodromy or TwistWord(()))
    word = TwistWord(tuple(gens)).compose(phi)
    cp = cabled_page(book, CableCoefficients(tuple((p, 1) for _ in range(n))))
    bp = braid_Bp(d, p) if p >= 2 else BraidWord(d)
    cert = positive_destabilization_certificate(bp) if p >= 2 else []
    return CableWord(word, None, cp, notes={"braid": bp, "markov_certificate": cert})


def sigma22_cover_system(g: int) -> tuple[CurveSystem, list[str]]:
    """Curve system of the (2,2)-cable page (genus 2g, two boundaries) as
    the double cover of the disk branched over 4g+2 points: the covering
    chain e1..e{4g+1} plus the rotation curves rho22_1..rho22_{2g+1} whose
    classes are extracted from the lifted band generators."""
    n = 4 * g + 2
    sys = CurveSystem(genus=2 * g, boundary_labels=("1", "2"), name=f"sigma22_g{g}")
    chain = [f"e{k}" for k in range(1, n)]
    for name, cls in zip(chain, chain_classes(n - 1, 2 * g)):
        sys.add_curve(name, cls)
    d1 = garside_half_twist(n, 1, 2 * g + 1)
    rho_names = []
    for i in range(1, 2 * g + 2):
        band = BraidWord.from_pairs(n, [(i, 2 * g + 1 + i, 1)])
        conj = d1 * band * d1.inverse()
        m = sys.word_matrix(lift_through_double_cover(conj, chain))
        cls, sign = extract_transvection_class(m)
        if sign != 1:
            raise MonodromyError("band lift extracted with the wrong handedness")
        name = f"rho22_{i}"
        sys.add_curve(name, cls)
        rho_names.append(name)
    for a_i, a in enumerate(rho_names):
        for b in rho_names[a_i + 1 :]:
            sys.record_intersection(a, b, abs(sys.pairing(a, b)))
    sys.add_boundary_curves()
    sys.check()
    return sys, rho_names


def monodromy_22_connected(book: RationalOpenBook) -> CableWord:
    """The (2,2)-cable monodromy: 2g+1 positive twists about the rotation
    curves, then the lift of the monodromy on nodule 1 (the chain curves
    e1..e{2g} cover the first nodule).

    Emits both braid factorizations of the rotation braid -- the half-twist
    form and the conjugated band form -- and checks that they agree at the
    permutation level and on homology after lifting.
    """
    _require_integral_connected(book)
    g = book.genus
    if g == 0:
        # disk page: the (2,2)-cable page is an annulus and the rotation is
        # one positive twist about its core
        sys0 = CurveSystem(genus=0, boundary_labels=("1", "2"), name="sigma22_g0")
        sys0.add_curve("rho22_1", (), nonseparating=False)
        sys0.add_boundary_curves()
        sys0.check()
        word = TwistWord.twists("rho22_1").compose(book.monodromy or TwistWord(()))
        cp = cabled_page(book, CableCoefficients(((2, 2),)))
        return CableWord(word, sys0, cp)
    sys, rho_names = sigma22_cover_system(g)
    chain = [f"e{k}" for k in range(1, 4 * g + 2)]
    half_form = r22_braid(g)
    d1 = garside_half_twist(4 * g + 2, 1, 2 * g + 1)
    band_form = d1 * braid_Bp(2 * g + 1, 2) * d1.inverse()
    if half_form.permutation() != band_form.permutation():
        raise MonodromyError("rotation braid factorizations disagree on strands")
    m_half = sys.word_matrix(lift_through_double_cover(half_form, chain))
    m_band = sys.word_matrix(lift_through_double_cover(band_form, chain))
    if m_half != m_band:
        raise MonodromyError("rotation braid factorizations disagree on homology")
    rot = TwistWord.twists(*reversed(rho_names))
    if sys.word_matrix(rot) != m_half:
        raise MonodromyError("rotation word disagrees with its braid lift")
    phi = TwistWord(
        tuple(
            Generator(DEHN, f"e{gen.curve[1:]}", gen.sign)
            if gen.kind == DEHN and gen.curve.startswith("c") and int(gen.curve[1:]) <= 2 * g
            else gen
            for gen in (book.monodromy or TwistWord(()))
        )
    )
    word = rot.compose(phi)
    cp = cabled_page(book, CableCoefficients(((2, 2),)))
    return CableWord(
        word,
        sys,
        cp,
        notes={"braid_half_twists": half_form, "braid_bands": band_form},
    )


def monodromy_pq(book: RationalOpenBook, p: int, q: int) -> CableWord:
    """The (p, q)-cable word for positive q: the (p, sgn q) word plus
    (|p|-1)(|q|-1) positive stabilization markers.  Negative q is the
    negative-cable regime and is refused here."""
    if q < 0 or p * q <= 0:
        raise MonodromyError(
            "negative cables have no positive-stabilization route; "
            "see negative_cable_word"
        )
    if book.has_connected_binding:
        base = monodromy_p1_connected(book, p)
    else:
        base = monodromy_p1_disconnected(book, p)
    count, kind = (0, "positive") if q == 1 else stabilization_count_pq_from_p1(p, q)
    markers = tuple(
        Generator.stabilization_marker(f"cable_{p}_{q}_{i}") for i in range(count)
    )
    pairs = tuple((p, q) for _ in book.components)
    cp = cabled_page(book, CableCoefficients(pairs))
    return CableWord(base.word.compose(TwistWord(markers)), base.system, cp, base.notes)


# -- negative cables, resolution words, the obstruction ----------------------


def negative_cable_word(book: RationalOpenBook) -> CableWord:
    """Normal form of the (r-1, -1)-cable of an (r, -1)-book with connected
    binding (Sigma, delta_{1/r} o phi): on the (r-1, 1)-cable page it reads
    delta_{1/r} o rho_{(r-1,1)}^{-1} o partial1^{2-r} o phi-lift."""
    if not book.has_connected_binding:
        raise MonodromyError("the negative-cable normal form needs connected binding")
    comp = normalize_to_window(book.components[0])
    r = comp.order
    if r < 2 or comp.seifert_numerator != -1:
        raise MonodromyError("book must be in (r, -1) form with r >= 2")
    g = book.genus
    word_in = book.monodromy or TwistWord(())
    phi = TwistWord(tuple(g_ for g_ in word_in if g_.kind != FRACTIONAL))
    phi = _lift_boundary_twists(lift_to_nodule(phi))
    p = r - 1
    rho_inv = rho_p1_rotation(g, p).inverse()
    gens: list[Generator] = [
        Generator.fractional_boundary("outer", Fraction(1, r))
    ]
    gens.extend(rho_inv.generators)
    gens.extend(Generator.dehn_twist("partial1", -1) for _ in range(r - 2))
    gens.extend(phi.generators)
    new_book = RationalOpenBook(
        genus=p * g,
        components=(BindingComponent(order=r, seifert_numerator=-1),),
        monodromy=TwistWord(tuple(gens)),
    )
    system = cable_p1_system(g, p) if p >= 2 else None
    return CableWord(TwistWord(tuple(gens)), system, new_book)


def _lift_boundary_twists(word: TwistWord) -> TwistWord:
    """Boundary twists of the pattern page lift to nodule-1 boundary twists."""
    out = []
    for gen in word:
        if gen.kind == DEHN and gen.curve.startswith("bdry_"):
            out.append(Generator(DEHN, "partial1", gen.sign))
        else:
            out.append(gen)
    return TwistWord(tuple(out))


def resolution_word_r0(book: RationalOpenBook) -> CableWord:
    """Word of the (r, 0)-resolution of a book whose rational components are
    all in (r, -1)-form: drop the fractional boundary twists and append one
    positive boundary twist for each new boundary component (the boundary
    multitwist acts first)."""
    from .classify import _resolve_impl

    for comp in book.components:
        w = normalize_to_window(comp)
        if w.order > 1 and w.seifert_numerator != -1:
            raise MonodromyError("multitwist resolution needs (r, -1) components")
    if book.monodromy is None:
        raise MonodromyError("no monodromy word to resolve")
    data = _resolve_impl(book, [0] * sum(1 for c in book.components if c.order > 1))
    if data.book.monodromy is None:
        raise MonodromyError("resolution did not produce a word")
    return CableWord(data.book.monodromy, None, data.book,
                     notes={"new_boundary_curves": data.new_boundary_curves})


@dataclass
class ObstructionReport:
    p: int
    algebraic_length: int
    mod10_length: int
    required_mod10: int
    filling_euler_characteristic: int
    positive_factorization_length: int
    obstructed: bool
    word_length: int

    def summary(self) -> str:
        if not self.obstructed:
            return f"L({self.p},{self.p - 1}): residues agree; no obstruction"
        return (
            f"L({self.p},{self.p - 1}): the cable word has algebraic length "
            f"{self.algebraic_length}, so any twist factorization has length "
            f"{self.mod10_length} (mod 10); the unique minimal filling has "
            f"Euler characteristic {self.filling_euler_characteristic}, so a "
            f"positive factorization would need length "
            f"{self.positive_factorization_length}, i.e. {self.required_mod10} "
            f"(mod 10). OBSTRUCTED: the residues differ, so this monodromy "
            f"has no positive factorization"
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "algebraic_length": self.algebraic_length,
            "mod10_length": self.mod10_length,
            "required_mod10": self.required_mod10,
            "filling_euler_characteristic": self.filling_euler_characteristic,
            "positive_factorization_length": self.positive_factorization_length,
            "obstructed": self.obstructed,
            "verdict": "OBSTRUCTED" if self.obstructed else "NOT-OBSTRUCTED",
        }


def stein_obstruction_Lppm1(p: int) -> ObstructionReport:
    """The length obstruction for the (2,1)-cable of the genus-one open book
    (T^2-page, D_1^p o D_2) supporting the standard tight structure on
    L(p, p-1).

    The cable word's algebraic length is 15 - 24 + p + 1 = p - 8 after the
    nodule boundary twists are expanded through the one-holed-torus chain
    factorization.  The unique minimal symplectic filling has Euler
    characteristic p, so a positive factorization would need p + 3 twists
    (one 0-handle, four 1-handles, one 2-handle per twist).  The residues
    p - 8 and p + 3 differ mod 10 for every p, so no positive factorization
    exists.
    """
    from .curves import algebraic_length, mod10_class

    if p < 1:
        raise MonodromyError("need p >= 1")
    base = RationalOpenBook(
        genus=1,
        components=(BindingComponent(order=1, seifert_numerator=0),),
        monodromy=TwistWord.twists(*(["c1"] * p + ["c2"])),
    )
    cable = monodromy_p1_connected(base, 2)
    assert cable.system is not None
    length = algebraic_length(cable.word, cable.system)
    mod10 = mod10_class(cable.word, cable.system)
    chi_filling = p
    needed = chi_filling + 3
    return ObstructionReport(
        p=p,
        algebraic_length=length,
        mod10_length=mod10,
        required_mod10=needed % 10,
        filling_euler_characteristic=chi_filling,
        positive_factorization_length=needed,
        obstructed=mod10 != needed % 10,
        word_length=len(cable.word),
    )


# -- cobordism words ----------------------------------------------------------


def compose_cobordism_word(
    phi1: TwistWord, phi2: TwistWord, page: RationalOpenBook
) -> CableWord:
    """Word of the open book at the convex end of the Stein cobordism from
    the disjoint union of (page, phi1) and (page, phi2): the all-positive
    rotation of the doubled page, then phi2 lifted to nodule 2 and phi1 to
    nodule 1.

    For connected binding the doubled page is the (2,2)-cable page (the
    rotation has 2g+1 positive twists) and the certificate records, via the
    homology oracle, that conjugating the nodule-2 factor past the rotation
    lands it on nodule 1.  For disconnected binding the (2,1)-cable rotation
    is used and the certificate is combinatorial.
    """
    if page.has_connected_binding:
        base = monodromy_22_connected(page.with_monodromy(TwistWord(())))
        sys = base.system
        assert sys is not None
        g = page.genus
        lift1 = _rename_chain(phi1, prefix="e", limit=2 * g)
        lift2 = _rename_chain(phi2, prefix="e", limit=2 * g, offset=2 * g + 1)
        word = base.word.compose(lift2).compose(lift1)
        rot_m = sys.word_matrix(base.word)
        m2 = sys.word_matrix(lift2)
        target = sys.word_matrix(_rename_chain(phi2, prefix="e", limit=2 * g))
        conj = mat_mul(mat_mul(rot_m, m2), _inverse_matrix(rot_m))
        certificate = {
            "conjugation_lands_on_nodule_1": conj == target,
            "rotation_positive": base.word.is_positive(),
        }
        if not certificate["conjugation_lands_on_nodule_1"]:
            raise MonodromyError("destabilization certificate failed the oracle")
        return CableWord(word, sys, base.book, notes=certificate)
    n = len(page.components)
    base = monodromy_p1_disconnected(page.with_monodromy(TwistWord(())), 2)
    word = base.word.compose(_prefix_word(phi2, "n2_")).compose(_prefix_word(phi1, "n1_"))
    return CableWord(
        word,
        None,
        base.book,
        notes={"rotation_positive": base.word.is_positive(), "nodules": 2},
    )


def _rename_chain(word: TwistWord, prefix: str, limit: int, offset: int = 0) -> TwistWord:
    """Map abstract chain twists c_k to the covering chain: nodule 1 keeps
    index k; with an offset the index mirrors into the far nodule, sending
    c_k to position offset + (limit + 1 - k)."""
    out = []
    for gen in word:
        if gen.kind == DEHN and gen.curve.startswith("c") and gen.curve[1:].isdigit():
            k = int(gen.curve[1:])
            if k > limit:
                raise MonodromyError(f"curve c{k} has no nodule model (limit {limit})")
            idx = k if offset == 0 else offset + (limit + 1 - k)
            out.append(Generator(DEHN, f"{prefix}{idx}", gen.sign))
        else:
            out.append(gen)
    return TwistWord(tuple(out))


def _prefix_word(word: TwistWord, prefix: str) -> TwistWord:
    return TwistWord(
        tuple(
            Generator(gen.kind, prefix + gen.curve, gen.sign, gen.amount)
            if gen.kind == DEHN
            else gen
            for gen in word
        )
    )


def _inverse_matrix(m):
    from fractions import Fraction

    n = len(m)
    a = [
        [Fraction(m[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        a[col] = [x / a[col][col] for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(tuple(int(a[i][n + j]) for j in range(n)) for i in range(n))
