"""SU(2) representation varieties of torus knot complements.

Reducible representations are parametrized by ``s`` in [0, 1/2] (the meridian
goes to ``exp(2 pi i s)``).  This module locates the special reducibles and
lifts the arcs of irreducibles of K(2, q) to the plane for 1/k surgery.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .geometry import GeometryError, Point, Segment, verify_lattice_avoidance, Path

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError(f"torus knot needs p, q >= 2, got ({self.p}, {self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got ({self.p}, {self.q})")


def _poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # exact division over Z; den must be monic up to sign
    num = list(num)
    lead = den[-1]
    if abs(lead) != 1:
        raise ValueError("divisor must have unit leading coefficient")
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        coef = num[shift + len(den) - 1] * lead
        quot[shift] = coef
        for j, d in enumerate(den):
            num[shift + j] -= coef * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _binomial_minus_one(n: int) -> list[int]:
    # t^n - 1, ascending coefficients
    return [-1] + [0] * (n - 1) + [1]


@dataclass(frozen=True)
class AlexanderPolynomial:
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        text = ""
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            body = (str(abs(c)) if abs(c) != 1 or i == 0 else "") + mono
            if not text:
                text = ("-" if c < 0 else "") + body
            else:
                text += (" - " if c < 0 else " + ") + body
        return text


def alexander_polynomial(knot: TorusKnot) -> AlexanderPolynomial:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by exact long division."""
    p, q = knot.p, knot.q
    num = _poly_mul(_binomial_minus_one(p * q), _binomial_minus_one(1))
    den = _poly_mul(_binomial_minus_one(p), _binomial_minus_one(q))
    quot, rem = _poly_divmod(num, den)
    if any(rem):
        raise ArithmeticError(f"nonzero remainder dividing for {knot}")
    return AlexanderPolynomial(tuple(quot))


class PointKind(enum.Enum):
    JUMPING = "jumping"
    BIFURCATION = "bifurcation"


@dataclass(frozen=True)
class SpecialPointSet:
    points: tuple[Fraction, ...]
    kind: PointKind

    def __post_init__(self):
        pts = self.points
        if any(not (0 < s < HALF) for s in pts):
            raise ValueError("special points must lie strictly between 0 and 1/2")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise ValueError("special points must be strictly increasing")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, s) -> bool:
        return s in self.points


def jumping_points(knot: TorusKnot) -> SpecialPointSet:
    """Reducibles whose meridian image is a root of the Alexander polynomial.

    These are s = a/(pq) in (0, 1/2) with a divisible by neither p nor q.
    """
    n = knot.p * knot.q
    pts = tuple(
        Fraction(a, n)
        for a in range(1, (n + 1) // 2)
        if a % knot.p and a % knot.q and Fraction(a, n) < HALF
    )
    return SpecialPointSet(pts, PointKind.JUMPING)


def bifurcation_points(knot: TorusKnot) -> SpecialPointSet:
    if knot.p != 2:
        raise ValueError("bifurcation points are only provided for (2, q) torus knots")
    q = knot.q
    pts = set()
    for ell in range(1, (q - 1) // 2 + 1):
        s = Fraction(2 * ell - 1, 4 * q)
        pts.update((s, HALF - s))
    return SpecialPointSet(tuple(sorted(pts)), PointKind.BIFURCATION)


@dataclass(frozen=True)
class ArcLift:
    """Straight-line lift of the arc of irreducibles ``ell`` for 1/k surgery on K(2, q)."""

    q: int
    k: int
    ell: int
    start: Point
    end: Point

    def at(self, t) -> Point:
        t = Fraction(t)
        return Point((1 - t) * self.start.x + t * self.end.x, (1 - t) * self.start.y + t * self.end.y)

    def segment(self) -> Segment:
        return Segment(self.start, self.end)

    @property
    def slope(self) -> Fraction:
        return (self.end.y - self.start.y) / (self.end.x - self.start.x)


def arc_lift(q: int, k: int, ell: int) -> ArcLift:
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    if k == 0:
        raise ValueError("k must be nonzero")
    if not 1 <= ell <= (q - 1) // 2:
        raise ValueError(f"ell must be in 1..{(q - 1) // 2}, got {ell}")
    s = Fraction(2 * ell - 1, 4 * q)
    drop = 2 * ell - q - 1
    lift = ArcLift(q, k, ell, Point(s, 0), Point(HALF - s + k * drop, drop))
    try:
        verify_lattice_avoidance(Path((lift.segment(),)))
    except GeometryError as exc:  # pragma: no cover - impossible for valid input
        raise AssertionError(f"arc lift meets the lattice: {exc}") from exc
    return lift


def unshear(p: Point, k: int) -> Point:
    """Inverse of the change of framing (m, n) -> (m + k n, n)."""
    return Point(p.x - k * p.y, p.y)
