"""Shipped curve systems, relations, and replayable rewrite scripts.

Three scripts are bundled:

* stabilize_21_to_22 -- from the (2,1)-cable word of the genus-one open book
  with monodromy D_1 o D_2, plus one positive stabilization, through two
  lantern substitutions, cancellations, and twist slides, to the positive
  three-twist form D_delta3 o D_delta2 o D_delta1 o phi-lift on the twice-
  punctured genus-2 page.
* garside_square_boundary -- consumes the square of the lifted Garside block
  into the page boundary twist.
* negative_cable_positive_refactor -- from the resolved (2,-1)-cable of the
  (3,-1)-book (Sigma, delta_{1/3} o boundary^2) to an all-positive word, via
  the five-holed-sphere lantern and the Garside square.

Homology classes of the figure-derived curves are bundled data
(data/sigma22_g1.json, data/resolved_neg_cable_g1.json), loaded relative to
CABLEKIT_DATA when that is set.  Every relation is gated by the homology
oracle at load time and every recorded intersection is checked against the
stored classes.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .curves import CurveSystem
from .monodromy import (
    cable_p1_system,
    garside_block,
    monodromy_p1_connected,
    negative_cable_word,
    p1_layout,
    resolution_word_r0,
)
from .openbook import BindingComponent, RationalOpenBook, positive_stabilize
from .rewrite import RelationRegistry, RewriteScript, Step, replay
from .words import Generator, TwistWord
from fractions import Fraction


def _load_data(filename: str) -> dict:
    override = os.environ.get("CABLEKIT_DATA")
    if override:
        path = os.path.join(override, filename)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    ref = resources.files("cablekit").joinpath("data").joinpath(filename)
    return json.loads(ref.read_text(encoding="utf-8"))


def _system_from_json(obj: dict) -> CurveSystem:
    sys = CurveSystem(
        genus=obj["genus"],
        boundary_labels=tuple(obj["boundary_labels"]),
        name=obj.get("name", ""),
    )
    for name, info in obj["curves"].items():
        sys.add_curve(
            name,
            tuple(info["homology"]),
            nonseparating=info.get("nonseparating", True),
            boundary_parallel=info.get("boundary_parallel"),
        )
    for a, b, value in obj.get("intersections", []):
        sys.record_intersection(a, b, value)
    sys.check()
    for name, word in obj.get("expansions", {}).items():
        sys.register_expansion(name, TwistWord.from_json(word))
    return sys


@dataclass
class ScriptBundle:
    """A script together with the registry it replays against and the words
    that anchor it: the start word and the expected final word."""

    script: RewriteScript
    registry: RelationRegistry
    start: TwistWord
    expect: TwistWord
    description: str

    def replay(self):
        return replay(self.script, self.start, self.registry, expect=self.expect)


# -- the stabilization script (genus-one input) ------------------------------


def sigma22_script_system() -> CurveSystem:
    """The stabilized (2,1)-cable page for a genus-one pattern: genus 2, two
    boundary circles, carrying the cable chain, the rotation curves of the
    capped form, both lantern configurations, and the slide images."""
    return _system_from_json(_load_data("sigma22_g1.json"))


def _tw(*items) -> TwistWord:
    return TwistWord.twists(*items)


def sigma22_registry(system: Optional[CurveSystem] = None) -> RelationRegistry:
    sys = system or sigma22_script_system()
    reg = RelationRegistry(sys)
    block = garside_block(p1_layout(1, 1))
    lhs = TwistWord.of(
        Generator.dehn_twist("partial2", -1), Generator.dehn_twist("partial1", -1)
    ).compose(block)
    reg.register(
        "rho21_dform",
        lhs,
        _tw("d3", "d2", "d1", ("partial2", -1)),
    )
    reg.register(
        "lantern_gamma",
        _tw("d1", "gamma"),
        _tw("c4", "c3", "c2", "c1", ("beta", -1)),
    )
    reg.register(
        "lantern_boundary",
        _tw(("beta", -1), ("partial2", -1)),
        _tw(("cp4", -1), ("c3", -1), ("c2", -1), ("cp1", -1), "delta1"),
    )
    conj = reg.register_conjugation
    conj("conj_d2_c4", Generator.dehn_twist("d2"), Generator.dehn_twist("c4"), "e2t")
    conj("conj_e2_cp4", Generator.dehn_twist("e2t"), Generator.dehn_twist("cp4", -1), "delta2")
    conj("conj_d3_c4", Generator.dehn_twist("d3"), Generator.dehn_twist("c4"), "e3t")
    conj("conj_e3_cp4", Generator.dehn_twist("e3t"), Generator.dehn_twist("cp4", -1), "delta3")
    reg.register(
        "conj_delta2_c1", _tw("delta2", "c1"), _tw("u1", "delta2")
    )
    reg.register(
        "conj_delta3_u1", _tw("delta3", "u1"), _tw("cp4", "delta3")
    )
    reg.register(
        "conj_delta2_cp1inv", _tw("delta2", ("cp1", -1)), _tw(("v1", -1), "delta2")
    )
    reg.register(
        "conj_delta3_v1inv", _tw("delta3", ("v1", -1)), _tw(("c4", -1), "delta3")
    )
    return reg


def stabilize_21_to_22_script() -> RewriteScript:
    s = RewriteScript("stabilize_21_to_22")
    steps = [
        Step("commute", 18),  # gamma past the second monodromy twist
        Step("commute", 17),  # gamma past the first monodromy twist
        Step("apply", 0, relation="rho21_dform"),
        Step("commute", 3),  # gamma past the residual boundary twist
        Step("apply", 2, relation="lantern_gamma"),
        Step("apply", 6, relation="lantern_boundary"),
        Step("commute", 3),
        Step("commute", 4),
        Step("commute", 5),
        Step("cancel", 6),  # c3 against its inverse
        Step("commute", 3),
        Step("commute", 4),
        Step("cancel", 5),  # c2 against its inverse
        Step("commute", 3),  # c1 past the negative cp4
        Step("apply", 1, relation="conj_d2_c4"),
        Step("apply", 2, relation="conj_e2_cp4"),
        Step("apply", 0, relation="conj_d3_c4"),
        Step("apply", 1, relation="conj_e3_cp4"),
        Step("apply", 3, relation="conj_delta2_c1"),
        Step("apply", 2, relation="conj_delta3_u1"),
        Step("cancel", 1),  # cp4 pair
        Step("apply", 2, relation="conj_delta2_cp1inv"),
        Step("apply", 1, relation="conj_delta3_v1inv"),
        Step("cancel", 0),  # c4 pair
    ]
    for st in steps:
        s.apply(st)
    return s


def stabilization_bundle() -> ScriptBundle:
    """Script (a): the (2,1)-cable word of (T^2, D_1 o D_2) plus one positive
    stabilization replays to D_delta3 o D_delta2 o D_delta1 o phi-lift."""
    reg = sigma22_registry()
    base = RationalOpenBook(
        genus=1,
        components=(BindingComponent(order=1, seifert_numerator=0),),
        monodromy=TwistWord.twists("c1", "c2"),
    )
    cable = monodromy_p1_connected(base, 2)
    cable_book = cable.book.with_monodromy(cable.word)
    stabilized = positive_stabilize(cable_book, 0, mode="same", curve_name="gamma")
    start = stabilized.monodromy
    assert start is not None
    expect = _tw("delta3", "delta2", "delta1", "n1_1", "n1_2")
    return ScriptBundle(
        stabilize_21_to_22_script(),
        reg,
        start,
        expect,
        "stabilize the (2,1)-cable word and rewrite it to three positive "
        "twists before the monodromy lift",
    )


# -- the Garside square -------------------------------------------------------


def garside_square_bundle(g: int = 1) -> ScriptBundle:
    """Script (b): the square of the lifted Garside block is the boundary
    twist of the (2,1)-cable page."""
    sys = cable_p1_system(g, 2)
    reg = RelationRegistry(sys)
    block = garside_block(p1_layout(g, 1))
    reg.register("garside_square", block.compose(block), _tw("bdry_outer"))
    script = RewriteScript("garside_square_boundary")
    script.apply(Step("apply", 0, relation="garside_square"))
    return ScriptBundle(
        script,
        reg,
        block.compose(block),
        _tw("bdry_outer"),
        "consume the Garside square into the boundary twist",
    )


# -- the positive refactorization ---------------------------------------------


def resolved_system() -> CurveSystem:
    return _system_from_json(_load_data("resolved_neg_cable_g1.json"))


def resolved_registry(system: Optional[CurveSystem] = None) -> RelationRegistry:
    sys = system or resolved_system()
    reg = RelationRegistry(sys)
    block = garside_block(p1_layout(1, 1))
    reg.register(
        "genlantern",
        _tw("partial1", "partial1", "partial2", "rb0_1", "rb0_2", "rb0_3"),
        _tw("dpartial", "D3g", "D2g", "D1g"),
    )
    reg.register(
        "garside_consume",
        block.inverse().compose(_tw("dpartial")),
        block,
    )
    reg.register(
        "lantern_A",
        _tw("partial1", "rb0_1", "rb0_2", "eps"),
        _tw("eps2", "D2g", "D1g"),
    )
    reg.register(
        "lantern_B",
        _tw("partial1", "eps2", "partial2", "rb0_3"),
        _tw("dpartial", "D3g", "eps"),
    )
    return reg


def negative_cable_refactor_script() -> RewriteScript:
    s = RewriteScript("negative_cable_positive_refactor")
    steps = [
        Step("commute", 16),  # partial2 past the inverse boundary twist
        Step("cancel", 15),  # partial1 pair
        Step("commute", 15),
        Step("commute", 16),
        Step("apply", 15, relation="genlantern"),
        Step("apply", 0, relation="garside_consume"),
    ]
    for st in steps:
        s.apply(st)
    return s


def negative_cable_bundle() -> ScriptBundle:
    """Script (c): the resolved (2,-1)-cable word of (Sigma_{1,1},
    delta_{1/3} o boundary^2) refactors into 18 positive twists."""
    reg = resolved_registry()
    pattern = RationalOpenBook(
        genus=1,
        components=(BindingComponent(order=3, seifert_numerator=-1),),
        monodromy=TwistWord.of(
            Generator.fractional_boundary("1", Fraction(1, 3)),
            Generator.dehn_twist("bdry_1"),
            Generator.dehn_twist("bdry_1"),
        ),
    )
    cabled = negative_cable_word(pattern)
    resolved = resolution_word_r0(cabled.book)
    start = resolved.word
    block = garside_block(p1_layout(1, 1))
    expect = block.compose(_tw("D3g", "D2g", "D1g"))
    return ScriptBundle(
        negative_cable_refactor_script(),
        reg,
        start,
        expect,
        "refactor the resolved negative cable into positive twists",
    )


def genlantern_derivation_bundle() -> ScriptBundle:
    """The five-holed-sphere lantern derived from two classic lanterns."""
    reg = resolved_registry()
    start = _tw("partial1", "partial1", "partial2", "rb0_1", "rb0_2", "rb0_3")
    expect = _tw("dpartial", "D3g", "D2g", "D1g")
    s = RewriteScript("genlantern_from_two_lanterns")
    for st in [
        Step("insert", 6, curve="eps", sign=1),
        Step("commute", 2),  # partial2 right past rb0_1
        Step("commute", 3),  # ... and rb0_2
        Step("commute", 5),  # eps left past rb0_3
        Step("commute", 4),  # ... and partial2
        Step("apply", 1, relation="lantern_A"),
        Step("commute", 3),  # D1g right past partial2
        Step("commute", 4),  # ... and rb0_3
        Step("commute", 2),  # D2g right past partial2
        Step("commute", 3),  # ... and rb0_3
        Step("apply", 0, relation="lantern_B"),
        Step("commute", 2),  # eps right past D2g
        Step("commute", 3),  # ... and D1g
        Step("cancel", 4),
    ]:
        s.apply(st)
    return ScriptBundle(
        s, reg, start, expect, "derive the generalized lantern from two classic ones"
    )


# -- classic lantern model -----------------------------------------------------


def lantern_genus3_model() -> tuple[CurveSystem, RelationRegistry]:
    """A four-holed sphere embedded in a capped genus-3 surface with all
    seven lantern curves nonseparating; the relation passes the oracle with
    a nontrivial matrix identity."""
    sys = CurveSystem(genus=3, boundary_labels=("1",), name="lantern_genus3")
    a1 = (1, 0, 0, 0, 0, 0)
    a2 = (0, 0, 1, 0, 0, 0)
    a3 = (0, 0, 0, 0, 1, 0)
    def add(*vs):
        return tuple(sum(x) for x in zip(*vs))
    def neg(v):
        return tuple(-x for x in v)
    sys.add_curve("L1", a1)
    sys.add_curve("L2", a2)
    sys.add_curve("L3", a3)
    sys.add_curve("L4", neg(add(a1, a2, a3)))
    sys.add_curve("x12", add(a1, a2))
    sys.add_curve("x23", add(a2, a3))
    sys.add_curve("x13", add(a1, a3))
    for pair in [("L1", "L2"), ("L1", "L3"), ("L1", "L4"), ("L2", "L3"),
                 ("L2", "L4"), ("L3", "L4")]:
        sys.record_intersection(*pair, 0)
    sys.add_boundary_curves()
    sys.check()
    reg = RelationRegistry(sys)
    reg.register(
        "lantern",
        _tw("L1", "L2", "L3", "L4"),
        _tw("x12", "x23", "x13"),
    )
    return sys, reg


def shipped_scripts() -> dict[str, ScriptBundle]:
    return {
        "stabilize_21_to_22": stabilization_bundle(),
        "garside_square_boundary": garside_square_bundle(),
        "negative_cable_positive_refactor": negative_cable_bundle(),
        "genlantern_from_two_lanterns": genlantern_derivation_bundle(),
    }
