"""Fiber invariants of torus knots and links on the Heegaard torus of a lens space.

The knot T(k,l) sits on the boundary torus of the genus-1 Heegaard splitting
of the lens space with parameters (r, s); it is the curve of slope l/k in the
longitude-meridian basis of the first solid torus.  For lens parameters we
always take 0 <= s < r, gcd(r, s) = 1, and r = 1 means the three-sphere.
Non-trivial such knots fiber, and the formulas below give the Euler
characteristic and boundary count of the fiber and the homological order of
the knot.  Classes with gcd(k, l) > 1 are torus links and are accepted as
long as no component is a trivial knot.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class TrivialTorusKnotError(ValueError):
    """The class bounds a disk, so the fiber formulas do not apply."""


def _gcd0(a: int, b: int) -> int:
    """gcd with gcd(0, n) = |n|, so the formulas degrade gracefully at k = 0."""
    return gcd(abs(a), abs(b))


@dataclass(frozen=True)
class LensTorusKnot:
    """The (k, l)-curve on the Heegaard torus of the (r, s) lens space."""

    r: int
    s: int
    k: int
    l: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"lens parameter r must be positive, got {self.r}")
        if not (0 <= self.s < self.r) and not (self.r == 1 and self.s == 0):
            raise ValueError(f"lens parameter s must satisfy 0 <= s < r, got {self.s}")
        if gcd(self.r, self.s) != 1:
            raise ValueError(f"lens parameters must be coprime, got ({self.r}, {self.s})")
        if (self.k, self.l) == (0, 0):
            raise ValueError("(k, l) = (0, 0) is not a curve class")

    @property
    def component_count(self) -> int:
        return _gcd0(self.k, self.l)

    def reduced_class(self) -> tuple[int, int]:
        """The underlying knot class (k, l)/gcd(k, l)."""
        c = self.component_count
        return (self.k // c, self.l // c)

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "k": self.k, "l": self.l}

    @staticmethod
    def from_json(obj: dict) -> "LensTorusKnot":
        return LensTorusKnot(r=obj["r"], s=obj["s"], k=obj["k"], l=obj["l"])


def is_trivial(K: LensTorusKnot) -> bool:
    """True iff the underlying knot bounds a disk in the lens space.

    That happens exactly for the meridians of the two Heegaard solid tori,
    the classes +-(0, 1) and +-(r, s).  For a link class the test is applied
    to the reduced class, so e.g. (0, n) counts as trivial.
    """
    kl = K.reduced_class()
    return kl in ((0, 1), (0, -1), (K.r, K.s), (-K.r, -K.s))


def is_rational_unknot(K: LensTorusKnot) -> bool:
    """True iff the knot's exterior is a solid torus (disk pages).

    Holds for the cores of the two Heegaard solid tori: (k, l) = +-(1, n),
    or r*l - s*k = +-1.
    """
    k, l = K.k, K.l
    if abs(k) == 1:
        return True
    return abs(K.r * l - K.s * k) == 1


def _require_fibered(K: LensTorusKnot) -> None:
    if is_trivial(K):
        raise TrivialTorusKnotError(f"{K} bounds a disk; fiber invariants undefined")


def euler_characteristic(K: LensTorusKnot) -> int:
    """Euler characteristic of the fiber surface of a non-trivial class."""
    _require_fibered(K)
    k, l, r, s = K.k, K.l, K.r, K.s
    twist = k * s - l * r
    num = abs(k) + abs(twist) - abs(k * twist)
    g = _gcd0(r, k)
    assert num % g == 0
    return num // g


def boundary_count(K: LensTorusKnot) -> int:
    """Number of boundary components of the fiber surface.

    For a knot this is gcd(r, k^2)/gcd(r, k).  A link with c parallel
    components contributes c times the count of its reduced class (the
    closed-form gcd identity in the knot case needs gcd(k, l) = 1).
    """
    _require_fibered(K)
    c = K.component_count
    k = K.k // c
    r = K.r
    b = _gcd0(r, k * k)
    g = _gcd0(r, k)
    assert b % g == 0
    return c * (b // g)


def homological_order(K: LensTorusKnot) -> int:
    """Order of the curve's total class in first homology of the lens space."""
    _require_fibered(K)
    return K.r // _gcd0(K.r, K.k)


def boundary_wrap(K: LensTorusKnot) -> int:
    """How many times each fiber boundary circle runs along its component."""
    _require_fibered(K)
    k = K.k // K.component_count
    return K.r // _gcd0(K.r, k * k)
