"""Exact rational plane geometry for paths in the punctured plane R^2 - Z^2.

Everything here is computed with :class:`fractions.Fraction`; no floating point
is ever produced.  Paths are built from straight segments and circular arcs,
where an arc is stored as a center, a squared radius and two endpoints, so the
radius itself never has to be rational.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class GeometryError(ValueError):
    """Raised when a geometric precondition is violated."""


class LatticeViolation(GeometryError):
    def __init__(self, index: int, piece: "Piece", point: "Point"):
        self.index = index
        self.piece = piece
        self.point = point
        super().__init__(f"piece {index} ({piece}) passes through lattice point {point}")


class PointOnPathError(GeometryError):
    pass


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def is_lattice(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def pt(x: Number | str, y: Number | str) -> Point:
    return Point(Fraction(x), Fraction(y))


class Orientation(enum.Enum):
    CCW = "ccw"
    CW = "cw"

    def flipped(self) -> "Orientation":
        return Orientation.CW if self is Orientation.CCW else Orientation.CCW


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    def __post_init__(self):
        if self.start == self.end:
            raise GeometryError(f"degenerate segment at {self.start}")

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)

    def translated(self, v: Point) -> "Segment":
        return Segment(self.start + v, self.end + v)

    def point_reflected(self) -> "Segment":
        return Segment(-self.start, -self.end)

    def __str__(self) -> str:
        return f"Segment {self.start} -> {self.end}"


@dataclass(frozen=True)
class Arc:
    """Circular arc from ``start`` to ``end`` about ``center``.

    ``start == end`` denotes the full circle traversed once.
    """

    center: Point
    radius_sq: Fraction
    start: Point
    end: Point
    orientation: Orientation = Orientation.CCW

    def __post_init__(self):
        object.__setattr__(self, "radius_sq", Fraction(self.radius_sq))
        if self.radius_sq <= 0:
            raise GeometryError("arc radius must be positive")
        for p in (self.start, self.end):
            if _norm_sq(p - self.center) != self.radius_sq:
                raise GeometryError(f"{p} is not on the circle about {self.center}")

    @property
    def is_full_circle(self) -> bool:
        return self.start == self.end

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius_sq, self.end, self.start, self.orientation.flipped())

    def translated(self, v: Point) -> "Arc":
        return Arc(self.center + v, self.radius_sq, self.start + v, self.end + v, self.orientation)

    def point_reflected(self) -> "Arc":
        # rotation by pi preserves orientation
        return Arc(-self.center, self.radius_sq, -self.start, -self.end, self.orientation)

    def __str__(self) -> str:
        return (
            f"Arc[{self.orientation.value}] about {self.center} r^2={self.radius_sq} "
            f"{self.start} -> {self.end}"
        )


Piece = Union[Segment, Arc]


@dataclass(frozen=True)
class Path:
    pieces: tuple[Piece, ...]
    closed: bool = False

    def __post_init__(self):
        pieces = tuple(self.pieces)
        object.__setattr__(self, "pieces", pieces)
        if not pieces:
            raise GeometryError("a path needs at least one piece")
        for i, (p, q) in enumerate(zip(pieces, pieces[1:])):
            if p.end != q.start:
                raise GeometryError(f"pieces {i} and {i + 1} do not meet: {p.end} != {q.start}")
        if self.closed and pieces[-1].end != pieces[0].start:
            raise GeometryError("closed path does not return to its start")

    @property
    def start(self) -> Point:
        return self.pieces[0].start

    @property
    def end(self) -> Point:
        return self.pieces[-1].end

    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def reversed(self) -> "Path":
        return Path(tuple(p.reversed() for p in reversed(self.pieces)), self.closed)

    def translated(self, v: Point) -> "Path":
        return Path(tuple(p.translated(v) for p in self.pieces), self.closed)

    def point_reflected(self, about: Point | None = None) -> "Path":
        """Rotate the path by pi about ``about`` (the origin by default)."""
        if about is None or about == Point(0, 0):
            return Path(tuple(p.point_reflected() for p in self.pieces), self.closed)
        shifted = self.translated(-about)
        return shifted.point_reflected().translated(about)

    def then(self, other: "Path", closed: bool = False) -> "Path":
        return Path(self.pieces + other.pieces, closed)


def polyline(points: Sequence[Point], closed: bool = False) -> Path:
    pts = list(points)
    if closed and pts[0] != pts[-1]:
        pts.append(pts[0])
    return Path(tuple(Segment(a, b) for a, b in zip(pts, pts[1:])), closed)


def circle(center: Point, radius_sq: Number, start: Point, orientation=Orientation.CCW) -> Path:
    return Path((Arc(center, Fraction(radius_sq), start, start, orientation),), closed=True)


# ---------------------------------------------------------------------------
# numbers of the form a + b*sqrt(d)


@dataclass(frozen=True)
class Surd:
    """``a + b*sqrt(d)`` with rational ``a, b`` and rational ``d > 0``."""

    a: Fraction
    b: Fraction
    d: Fraction

    def _lift(self, other) -> "Surd":
        if isinstance(other, Surd):
            if other.d != self.d and other.b != 0 and self.b != 0:
                raise ValueError("mixed radicands")
            return other
        return Surd(Fraction(other), Fraction(0), self.d)

    def __add__(self, other) -> "Surd":
        o = self._lift(other)
        return Surd(self.a + o.a, self.b + o.b, self.d if self.b else o.d)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "Surd":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Surd":
        return self._lift(other) - self

    def __mul__(self, other) -> "Surd":
        o = self._lift(other)
        d = self.d if self.b else o.d
        return Surd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def sign(self) -> int:
        sa = _sign(self.a)
        sb = _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        return 0


def _sign(x) -> int:
    if isinstance(x, Surd):
        return x.sign()
    return (x > 0) - (x < 0)


def _norm_sq(v: Point) -> Fraction:
    return v.x * v.x + v.y * v.y


def _cross(ux, uy, vx, vy):
    return ux * vy - uy * vx


def _dot(ux, uy, vx, vy):
    return ux * vx + uy * vy


def _angle_before(ref, u, v) -> bool:
    """True if ``u`` comes strictly before ``v`` sweeping CCW from ``ref``.

    Vectors are pairs whose entries may be rationals or :class:`Surd`.
    The direction of ``ref`` itself has angle 0.
    """

    def half(w) -> int:
        c = _sign(_cross(ref[0], ref[1], w[0], w[1]))
        if c > 0 or (c == 0 and _sign(_dot(ref[0], ref[1], w[0], w[1])) > 0):
            return 0
        return 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return hu < hv
    c = _sign(_cross(ref[0], ref[1], u[0], u[1]))
    if c == 0 and _sign(_dot(ref[0], ref[1], u[0], u[1])) > 0:
        # u has angle 0; v is before it only if it also has angle 0
        cv = _sign(_cross(ref[0], ref[1], v[0], v[1]))
        return not (cv == 0 and _sign(_dot(ref[0], ref[1], v[0], v[1])) > 0)
    return _sign(_cross(u[0], u[1], v[0], v[1])) > 0


def _strictly_inside_arc(arc: Arc, vx, vy) -> bool:
    """Is the direction (vx, vy) from the center strictly between the endpoints?"""
    s = arc.start - arc.center
    e = arc.end - arc.center
    if arc.orientation is Orientation.CW:
        s, e = e, s
    ref = (s.x, s.y)
    same_as = lambda w: (
        _sign(_cross(w.x, w.y, vx, vy)) == 0 and _sign(_dot(w.x, w.y, vx, vy)) > 0
    )
    if same_as(s) or same_as(e):
        return False
    if arc.is_full_circle:
        return True
    return _angle_before(ref, (vx, vy), (e.x, e.y))


def point_on_piece(piece: Piece, p: Point) -> bool:
    if isinstance(piece, Segment):
        a, b = piece.start, piece.end
        if _cross(b.x - a.x, b.y - a.y, p.x - a.x, p.y - a.y) != 0:
            return False
        return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    v = p - piece.center
    if _norm_sq(v) != piece.radius_sq:
        return False
    if p == piece.start or p == piece.end:
        return True
    return _strictly_inside_arc(piece, v.x, v.y)


# ---------------------------------------------------------------------------
# lattice avoidance


def _segment_lattice_points(seg: Segment) -> Iterator[Point]:
    a, b = seg.start, seg.end
    dx, dy = b.x - a.x, b.y - a.y
    if dx == 0:
        if a.x.denominator != 1:
            return
        for y in range(math.ceil(min(a.y, b.y)), math.floor(max(a.y, b.y)) + 1):
            yield Point(a.x, y)
        return
    slope = dy / dx
    for x in range(math.ceil(min(a.x, b.x)), math.floor(max(a.x, b.x)) + 1):
        y = a.y + (x - a.x) * slope
        if y.denominator == 1:
            yield Point(x, y)


def _radius_bound(radius_sq: Fraction) -> int:
    # integer upper bound for sqrt(radius_sq)
    return math.isqrt(math.ceil(radius_sq)) + 1


def _arc_lattice_points(arc: Arc) -> Iterator[Point]:
    r = _radius_bound(arc.radius_sq)
    c = arc.center
    for x in range(math.floor(c.x) - r, math.ceil(c.x) + r + 1):
        rest = arc.radius_sq - (x - c.x) ** 2
        if rest < 0:
            continue
        for y in range(math.floor(c.y) - r, math.ceil(c.y) + r + 1):
            if (y - c.y) ** 2 == rest and point_on_piece(arc, Point(x, y)):
                yield Point(x, y)


def lattice_points_on(piece: Piece) -> list[Point]:
    if isinstance(piece, Segment):
        return list(_segment_lattice_points(piece))
    return list(_arc_lattice_points(piece))


def lattice_violations(path: Path, exempt: Iterable[Point] = ()) -> list[LatticeViolation]:
    skip = set(exempt)
    found = []
    for i, piece in enumerate(path.pieces):
        for p in lattice_points_on(piece):
            if p not in skip:
                found.append(LatticeViolation(i, piece, p))
    return found


def verify_lattice_avoidance(path: Path, exempt: Iterable[Point] = ()) -> None:
    """Raise :class:`LatticeViolation` for the first piece touching Z^2.

    Points listed in ``exempt`` (e.g. the trivial connection at the origin)
    are allowed to lie on the path.
    """
    bad = lattice_violations(path, exempt)
    if bad:
        raise bad[0]


# ---------------------------------------------------------------------------
# winding numbers


def _segment_crossings(seg: Segment, y: Fraction) -> list[tuple[object, int]]:
    a, b = seg.start, seg.end
    above_a, above_b = a.y >= y, b.y >= y
    if above_a == above_b:
        return []
    x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
    return [(x, 1 if above_b else -1)]


def _arc_crossings(arc: Arc, y: Fraction) -> list[tuple[object, int]]:
    # Track the predicate "piece is at or above the line" along the arc and
    # report each change of that predicate with its signed direction.
    c = arc.center
    h = y - c.y
    disc = arc.radius_sq - h * h
    ccw = arc.orientation is Orientation.CCW
    if disc < 0:
        return []
    if disc == 0:
        if h < 0:
            return []
        events = []
        top = Point(c.x, y)
        if arc.start == top:
            events.append((c.x, -1))
        if arc.end == top:
            events.append((c.x, 1))
        return events
    events = []
    for side in (1, -1):
        going_up = (side > 0) == ccw
        hits_start = arc.start.y == y and _sign(arc.start.x - c.x) == side
        hits_end = arc.end.y == y and _sign(arc.end.x - c.x) == side
        x = Surd(c.x, Fraction(side), disc)
        if hits_start or hits_end:
            if hits_start and not going_up:
                events.append((x, -1))
            if hits_end and going_up:
                events.append((x, 1))
        elif _strictly_inside_arc(arc, Surd(Fraction(0), Fraction(side), disc), h):
            events.append((x, 1 if going_up else -1))
    return events


def crossings(piece: Piece, y: Number) -> list[tuple[object, int]]:
    """Signed crossings of ``piece`` with the horizontal line at height ``y``.

    Each event is ``(x, +1)`` for an upward and ``(x, -1)`` for a downward
    crossing, using the half-open rule (a point exactly on the line counts
    as above it).  ``x`` is a Fraction or a :class:`Surd`.
    """
    y = Fraction(y)
    if isinstance(piece, Segment):
        return _segment_crossings(piece, y)
    return _arc_crossings(piece, y)


def _right_of(x, px: Fraction) -> bool:
    return _sign(x - px) > 0


def winding_number(path: Path, point: Point) -> int:
    """Winding number of a closed path about ``point`` (CCW positive).

    Counts signed crossings of the ray ``{(x, point.y) : x > point.x}``.
    """
    if not path.closed:
        raise GeometryError("winding number needs a closed path")
    for piece in path.pieces:
        if point_on_piece(piece, point):
            raise PointOnPathError(f"{point} lies on {piece}")
    total = 0
    for piece in path.pieces:
        for x, s in crossings(piece, point.y):
            if _right_of(x, point.x):
                total += s
    return total


def lattice_bounding_box(path: Path) -> tuple[int, int, int, int]:
    """Integer box ``(xmin, xmax, ymin, ymax)`` containing the whole path."""
    xs: list[Fraction] = []
    ys: list[Fraction] = []
    for piece in path.pieces:
        if isinstance(piece, Segment):
            xs += [piece.start.x, piece.end.x]
            ys += [piece.start.y, piece.end.y]
        else:
            r = _radius_bound(piece.radius_sq)
            xs += [piece.center.x - r, piece.center.x + r]
            ys += [piece.center.y - r, piece.center.y + r]
    return math.floor(min(xs)), math.ceil(max(xs)), math.floor(min(ys)), math.ceil(max(ys))


def lattice_linking(path: Path) -> int:
    """Algebraic number of lattice points enclosed by a closed path.

    A small CCW circle about a lattice point has linking number 1.
    """
    if not path.closed:
        raise GeometryError("linking number needs a closed path")
    verify_lattice_avoidance(path)
    xmin, xmax, ymin, ymax = lattice_bounding_box(path)
    total = 0
    for y in range(ymin, ymax + 1):
        events = [e for piece in path.pieces for e in crossings(piece, y)]
        if not events:
            continue
        for x in range(xmin, xmax + 1):
            px = Fraction(x)
            total += sum(s for ex, s in events if _right_of(ex, px))
    return total


def path_integral_two_n_mprime(path: Path) -> Fraction:
    """Exact value of 2 * integral of n dm along a polyline in the (m, n) plane."""
    total = Fraction(0)
    for piece in path.pieces:
        if not isinstance(piece, Segment):
            raise GeometryError("the integral is only defined here for polylines")
        total += (piece.end.x - piece.start.x) * (piece.start.y + piece.end.y)
    return total
