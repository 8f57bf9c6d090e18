"""Exact rational slope arithmetic on a framed torus.

A slope q/p records the homology class p*[longitude] + q*[meridian] of an
essential curve on the boundary torus of a knot neighborhood.  The meridian
is the slope 1/0, written "inf"; the framing curve is 0/1.  All arithmetic
is exact (plain Python integers), and values are immutable.

The module also computes negative continued fraction expansions

    s = 1 / (r_0 - 1/(r_1 - 1/(... - 1/r_k)))        with every r_i <= -2

for s in (-1, 0), shortest paths in the Farey tessellation that stay inside
the closed interval spanned by their endpoints, and the exceptional cabling
slopes of a Seifert slope.  Interval paths are what the solid-torus layering
calculus uses: an unconstrained graph geodesic between two slopes can be
strictly shorter than every path through the interval (already for -1 and
-7/10, via -2/3), so the two notions are deliberately kept distinct here and
only the interval version is implemented.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class SlopeDomainError(ValueError):
    """Raised when a slope lies outside an operation's domain."""


@dataclass(frozen=True, order=False)
class Slope:
    """A reduced fraction numerator/denominator; 1/0 is the meridian."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        q, p = self.numerator, self.denominator
        if q == 0 and p == 0:
            raise SlopeDomainError("0/0 is not a slope")
        g = gcd(abs(q), abs(p))
        q, p = q // g, p // g
        if p < 0 or (p == 0 and q < 0):
            q, p = -q, -p
        object.__setattr__(self, "numerator", q)
        object.__setattr__(self, "denominator", p)

    # -- basic queries ----------------------------------------------------

    @property
    def is_meridian(self) -> bool:
        return self.denominator == 0

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def vector(self) -> tuple[int, int]:
        """The primitive class (numerator, denominator)."""
        return (self.numerator, self.denominator)

    # -- order on finite slopes --------------------------------------------

    def _finite(self) -> "Slope":
        if self.is_meridian:
            raise SlopeDomainError("the meridian is not ordered against finite slopes")
        return self

    def __lt__(self, other: "Slope") -> bool:
        qa, pa = self._finite().vector()
        qb, pb = other._finite().vector()
        return qa * pb < qb * pa

    def __le__(self, other: "Slope") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Slope") -> bool:
        return other < self

    def __ge__(self, other: "Slope") -> bool:
        return self == other or other < self

    # -- conversions -------------------------------------------------------

    def __str__(self) -> str:
        if self.is_meridian:
            return "inf"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Slope({self})"

    @staticmethod
    def parse(text: str) -> "Slope":
        """Parse "q/p", a bare integer, or "inf"."""
        text = text.strip()
        if text in ("inf", "Inf", "INF", "1/0", "-1/0"):
            return Slope(1, 0)
        if "/" in text:
            q, p = text.split("/", 1)
            return Slope(int(q), int(p))
        return Slope(int(text))

    def to_json(self) -> str:
        return str(self)


MERIDIAN = Slope(1, 0)


def farey_neighbors(a: Slope, b: Slope) -> bool:
    """True iff the two slopes share an edge of the Farey tessellation.

    The edge criterion is |q_a*p_b - q_b*p_a| = 1; the meridian 1/0 is a
    legal vertex (adjacent to every integer).
    """
    qa, pa = a.vector()
    qb, pb = b.vector()
    return abs(qa * pb - qb * pa) == 1


def _det(u: tuple[int, int], w: tuple[int, int]) -> int:
    return u[0] * w[1] - w[0] * u[1]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _hull_chain(u: tuple[int, int], w: tuple[int, int]) -> list[tuple[int, int]]:
    """Unimodular chain from u to w along the hull of their lattice cone.

    u, w are primitive (numerator, denominator) vectors with denominator > 0
    and slope(u) < slope(w).  Returns the lattice points on the boundary of
    the convex hull of the nonzero lattice points in cone(u, w), walked from
    u to w.  Consecutive members pair to determinant -1, slopes increase
    strictly, and the chain realizes the shortest Farey path from slope(u)
    to slope(w) through the closed slope interval.
    """
    chain = [u]
    v = u
    while True:
        d = _det(v, w)  # stays negative while v != w
        if abs(d) == 1:
            chain.append(w)
            return chain
        # Solve det(v, z) = -1, then slide z by multiples of v to the hull
        # member: the candidate closest to the w-edge of the cone from the
        # inside, i.e. with det(candidate, w) <= 0 maximal.
        _, x, y = _ext_gcd(v[0], v[1])  # v_q*x + v_p*y = 1
        z = (y, -x)  # det(v, z) = -(v_q*x + v_p*y) = -1
        dzw = _det(z, w)
        t = -((-dzw) // (-d))  # ceil(dzw / |d|)
        vnext = (z[0] + t * v[0], z[1] + t * v[1])
        dnext = _det(vnext, w)
        if dnext == 0:  # vnext is w itself (both primitive on one ray)
            chain.append(w)
            return chain
        assert d < dnext < 0 and _det(v, vnext) == -1
        chain.append(vnext)
        v = vnext


def farey_shortest_path(start: Slope, end: Slope) -> list[Slope]:
    """Shortest Farey path between two finite slopes through their interval.

    Every vertex of the returned path lies in the closed interval
    [min(start, end), max(start, end)]; consecutive vertices are Farey
    neighbors, interior vertices are strictly monotone, and no path through
    the interval is shorter.  Reversing the arguments reverses the path.
    """
    if start.is_meridian or end.is_meridian:
        raise SlopeDomainError("interval paths are defined for finite slopes")
    if start == end:
        return [start]
    if start < end:
        lo, hi, flip = start, end, False
    else:
        lo, hi, flip = end, start, True
    chain = _hull_chain(lo.vector(), hi.vector())
    path = [Slope(q, p) for q, p in chain]
    return path[::-1] if flip else path


class NegContinuedFraction:
    """An expansion [r_0, ..., r_k] of the nest 1/(r_0 - 1/(r_1 - ...)).

    Canonical form has every term <= -2; the collapse rule
    [..., r_j, -1] = [..., r_j + 1] is applied by :meth:`canonical`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(int(t) for t in terms)
        if not self.terms:
            raise SlopeDomainError("empty continued fraction")

    def __eq__(self, other):
        return isinstance(other, NegContinuedFraction) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"NegContinuedFraction({list(self.terms)})"

    def is_canonical(self) -> bool:
        return all(t <= -2 for t in self.terms)

    def canonical(self) -> "NegContinuedFraction":
        """Collapse trailing -1 terms until every term is <= -2.

        Preserves the rational value.  The single term [-1], the expansion
        of the slope -1 itself, is already as collapsed as it gets.
        """
        terms = list(self.terms)
        while len(terms) > 1 and terms[-1] == -1:
            terms.pop()
            terms[-1] += 1
        cf = NegContinuedFraction(terms)
        if not cf.is_canonical() and cf.terms != (-1,):
            raise SlopeDomainError(f"cannot canonicalize terms {list(self.terms)}")
        return cf


def eval_cont_frac(cf: NegContinuedFraction) -> Slope:
    """Evaluate the nested fraction.  Raises on a vanishing partial denominator."""
    x_num, x_den = 0, 1  # value hanging below the innermost term
    for r in reversed(cf.terms):
        den_num = r * x_den - x_num  # r - x, over denominator x_den
        if den_num == 0:
            raise ZeroDivisionError(f"partial denominator vanishes in {list(cf.terms)}")
        x_num, x_den = x_den, den_num
    return Slope(x_num, x_den)


def neg_cont_frac(s: Slope) -> NegContinuedFraction:
    """Canonical expansion (all terms <= -2) of a slope in (-1, 0)."""
    if s.is_meridian or not (Slope(-1) < s < Slope(0)):
        raise SlopeDomainError(f"{s} is not in (-1, 0)")
    terms = []
    num, den = s.vector()  # running value num/den, always in (-1, 0)
    while num:
        r = den // num  # floor of 1/value; lands in (1/value - 1, 1/value]
        terms.append(r)
        # residue r - 1/value lies in (-1, 0]; it is the next nest value
        num, den = den - r * num, -num
    return NegContinuedFraction(terms)


def exceptional_slopes(seifert: Slope) -> list[Slope]:
    """Exceptional cabling slopes for a framing-normalized Seifert slope.

    For seifert = 0 (an integral component in its page framing) the only
    exceptional slope is -1.  For seifert in (-1, 0) the slopes e_1, ...,
    e_n are produced by repeatedly adding 1 to the last term of the
    continued-fraction expansion (collapsing trailing -1 terms), stopping at
    e_n = -1.  They are precisely the interior vertices, plus -1 itself, of
    the interval Farey path from -1 to the Seifert slope, read from the
    Seifert side.
    """
    if seifert == Slope(0):
        return [Slope(-1)]
    if seifert.is_meridian or not (Slope(-1) < seifert < Slope(0)):
        raise SlopeDomainError(f"Seifert slope {seifert} must be 0 or in (-1, 0)")
    out: list[Slope] = []
    terms = list(neg_cont_frac(seifert).terms)
    while True:
        terms[-1] += 1
        cf = NegContinuedFraction(terms).canonical()
        terms = list(cf.terms)
        value = eval_cont_frac(cf)
        out.append(value)
        if value == Slope(-1):
            return out


# -- brute-force oracle ----------------------------------------------------


def mediant_farey_graph(bound: int) -> dict[Slope, set[Slope]]:
    """Farey tessellation edges among slopes with |num| <= bound, den <= bound.

    Built by Stern-Brocot mediant subdivision of each integer fan,
    independently of the production path algorithm.  An edge is kept when
    both endpoints survive the bounds.
    """
    adj: dict[Slope, set[Slope]] = {}

    def in_bounds(v: tuple[int, int]) -> bool:
        return abs(v[0]) <= bound and v[1] <= bound

    def add_edge(u: tuple[int, int], w: tuple[int, int]):
        if in_bounds(u) and in_bounds(w):
            a, b = Slope(*u), Slope(*w)
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)

    def subdivide(u: tuple[int, int], w: tuple[int, int]):
        m = (u[0] + w[0], u[1] + w[1])
        if m[1] > bound:
            return
        add_edge(u, m)
        add_edge(m, w)
        subdivide(u, m)
        subdivide(m, w)

    for n in range(-bound, bound):
        u, w = (n, 1), (n + 1, 1)
        add_edge(u, w)
        subdivide(u, w)
    return adj


def bfs_interval_path_length(
    graph: dict[Slope, set[Slope]], start: Slope, end: Slope
) -> int:
    """Edge count of a shortest path inside [start, end], by breadth-first search."""
    if start == end:
        return 0
    lo, hi = (start, end) if start < end else (end, start)
    frontier = [start]
    dist = {start: 0}
    while frontier:
        nxt = []
        for v in frontier:
            for w in graph.get(v, ()):
                if w in dist or w < lo or hi < w:
                    continue
                dist[w] = dist[v] + 1
                if w == end:
                    return dist[w]
                nxt.append(w)
        frontier = nxt
    raise SlopeDomainError(f"no interval path from {start} to {end} in bounded graph")
