"""Relation registry and oracle-checked word rewriting.

Relations are registered against a curve system and gated by the homology
oracle: both sides must induce the same symplectic matrix.  Scripts replay a
sequence of steps against a concrete word; every step's precondition is
checked when it fires (exact subword match for relations, adjacency plus an
inverse pair for cancellation, a recorded zero intersection for commutation),
and the replay verifies at the end that the symplectic matrix of the word
never changed.  Passing a replay certifies "equal on homology and related by
a verified elementary-move script" -- nothing stronger is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .curves import CurveSystem, words_equal_on_homology
from .words import Generator, TwistWord


class RelationOracleError(ValueError):
    """A candidate relation failed the homology gate."""


class RewriteError(ValueError):
    """A replay step's precondition failed."""


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: TwistWord
    rhs: TwistWord


class RelationRegistry:
    """Named relations over one curve system, each gated on registration."""

    def __init__(self, system: CurveSystem):
        self.system = system
        self.relations: dict[str, Relation] = {}

    def register(self, name: str, lhs: TwistWord, rhs: TwistWord) -> Relation:
        if name in self.relations:
            raise RelationOracleError(f"relation {name!r} already registered")
        if not words_equal_on_homology(lhs, rhs, self.system):
            raise RelationOracleError(f"relation {name!r} fails the homology oracle")
        rel = Relation(name, lhs, rhs)
        self.relations[name] = rel
        return rel

    def register_conjugation(
        self, name: str, moving: Generator, past: Generator, image_curve: str
    ) -> Relation:
        """Register T_moving o T_past = T_past o T_image, the slide of a twist
        past another; the image curve must be declared in the system and is
        verified by the oracle (its class must be the transvection image)."""
        image = Generator(moving.kind, image_curve, moving.sign)
        return self.register(
            name,
            TwistWord.of(moving, past),
            TwistWord.of(past, image),
        )

    def get(self, name: str) -> Relation:
        try:
            return self.relations[name]
        except KeyError:
            raise RewriteError(f"relation {name!r} is not registered")


@dataclass(frozen=True)
class Step:
    """One replay step.

    kind "apply": replace relation lhs by rhs at `position` (direction "lr")
    or rhs by lhs ("rl").  kind "cancel": remove the inverse pair at
    `position`, `position`+1.  kind "commute": swap the two generators at
    `position`, `position`+1 when their curves have recorded intersection 0.
    kind "insert": insert the pair T_curve^sign, T_curve^-sign at `position`
    (free: the word value is unchanged).
    """

    kind: str
    position: int
    relation: str = ""
    direction: str = "lr"
    curve: str = ""
    sign: int = 1

    def to_json(self) -> dict:
        obj = {"step": self.kind, "position": self.position}
        if self.kind == "apply":
            obj["relation"] = self.relation
            obj["direction"] = self.direction
        if self.kind == "insert":
            obj["curve"] = self.curve
            obj["sign"] = self.sign
        return obj

    @staticmethod
    def from_json(obj: dict) -> "Step":
        return Step(
            kind=obj["step"],
            position=obj["position"],
            relation=obj.get("relation", ""),
            direction=obj.get("direction", "lr"),
            curve=obj.get("curve", ""),
            sign=obj.get("sign", 1),
        )


@dataclass
class RewriteScript:
    name: str
    steps: list[Step] = field(default_factory=list)

    def apply(self, step: Step) -> "RewriteScript":
        self.steps.append(step)
        return self

    def to_json(self) -> dict:
        return {"name": self.name, "steps": [s.to_json() for s in self.steps]}

    @staticmethod
    def from_json(obj: dict) -> "RewriteScript":
        return RewriteScript(obj["name"], [Step.from_json(s) for s in obj["steps"]])


@dataclass
class ReplayResult:
    word: TwistWord
    log: list[str]
    verified: bool


def _apply_step(word: TwistWord, step: Step, registry: RelationRegistry) -> TwistWord:
    gens = list(word.generators)
    i = step.position
    if step.kind == "apply":
        rel = registry.get(step.relation)
        src, dst = (rel.lhs, rel.rhs) if step.direction == "lr" else (rel.rhs, rel.lhs)
        if tuple(gens[i : i + len(src)]) != src.generators:
            raise RewriteError(
                f"relation {rel.name!r} ({step.direction}) does not match at {i}: "
                f"word has {[str(g) for g in gens[i:i+len(src)]]}"
            )
        return TwistWord(tuple(gens[:i]) + dst.generators + tuple(gens[i + len(src) :]))
    if step.kind == "cancel":
        if i + 1 >= len(gens) or not gens[i].is_inverse_of(gens[i + 1]):
            raise RewriteError(f"no inverse pair at {i}")
        return TwistWord(tuple(gens[:i] + gens[i + 2 :]))
    if step.kind == "commute":
        if i + 1 >= len(gens):
            raise RewriteError(f"no adjacent pair at {i}")
        a, b = gens[i], gens[i + 1]
        recorded = registry.system.recorded_intersection(a.curve, b.curve)
        if recorded != 0:
            raise RewriteError(
                f"cannot commute {a} and {b}: recorded intersection is {recorded}"
            )
        gens[i], gens[i + 1] = b, a
        return TwistWord(tuple(gens))
    if step.kind == "insert":
        g = Generator.dehn_twist(step.curve, step.sign)
        registry.system.curve(step.curve)
        return TwistWord(tuple(gens[:i]) + (g, g.inverse()) + tuple(gens[i:]))
    raise RewriteError(f"unknown step kind {step.kind!r}")


def replay(
    script: RewriteScript,
    word: TwistWord,
    registry: RelationRegistry,
    expect: Optional[TwistWord] = None,
) -> ReplayResult:
    """Run every step with its precondition checked, then verify the oracle.

    The final word must induce the same symplectic matrix as the input (free
    steps and gated relations cannot change it; this re-checks the whole
    pipeline).  When `expect` is given the final word must equal it exactly.
    """
    sys_ = registry.system
    start_matrix = sys_.word_matrix(word)
    log: list[str] = []
    current = word
    for n, step in enumerate(script.steps):
        current = _apply_step(current, step, registry)
        log.append(f"{n:3d} {step.kind:7s} @{step.position:<3d} "
                   f"{step.relation or step.curve or ''} -> length {len(current)}")
    if sys_.word_matrix(current) != start_matrix:
        raise RewriteError(f"replay of {script.name!r} changed the homology matrix")
    if expect is not None and current.generators != expect.generators:
        raise RewriteError(
            f"replay of {script.name!r} produced {current}, expected {expect}"
        )
    return ReplayResult(current, log, True)
