"""Geometric route to the invariants of flat SU(2) connections on 1/k surgery.

For each flat connection on the homology sphere obtained by 1/k surgery on the
(2, q) torus knot we build the boundary holonomy path (m_t, n_t) in the plane,
read off the integers a, b, c and the integral of n dm from it, count the
jumping points crossed by its reducible part, and assemble the C^2 spectral
flow, the real Chern-Simons invariant and the rho invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import gauge
from .geometry import (
    Arc,
    GeometryError,
    Orientation,
    Path,
    Point,
    Segment,
    lattice_linking,
    path_integral_two_n_mprime,
    verify_lattice_avoidance,
)
from .repvar import TorusKnot, arc_lift, jumping_points

ORIGIN = Point(0, 0)


@dataclass(frozen=True)
class SurgeryProblem:
    """1/k surgery on the (2, q) torus knot; k = 0 is S^3 itself."""

    q: int
    k: int

    def __post_init__(self):
        if self.q < 3 or self.q % 2 == 0:
            raise ValueError(f"q must be an odd integer >= 3, got {self.q}")

    @property
    def knot(self) -> TorusKnot:
        return TorusKnot(2, self.q)

    @property
    def arc_count(self) -> int:
        return (self.q - 1) // 2

    @property
    def expected_count(self) -> int:
        return abs(self.k) * (self.q * self.q - 1) // 4


@dataclass(frozen=True)
class FlatConnectionLabel:
    ell: int
    i: int
    t: Fraction


@dataclass(frozen=True)
class InvariantRecord:
    q: int
    k: int
    ell: int
    i: int
    a: int
    b: int
    c: int
    sf_knot_complement: int
    integral: Fraction
    sf: int
    cs: Fraction
    rho: Fraction
    kernel_dim: int = 0

    def rho_from_abc(self) -> Fraction:
        """Rho invariant straight from the path data, bypassing sf and cs."""
        return (
            2 * self.sf_knot_complement
            + 4 * (self.a - self.b + self.c)
            - 2
            - self.kernel_dim
            - 4 * self.integral
        )


def label_t(q: int, k: int, ell: int, i: int) -> Fraction:
    """Closed-form parameter of the i-th flat connection on the lift of arc ell."""
    if k > 0:
        return Fraction(4 * q * (1 - i) - 2 * ell + 1, (4 * q * k - 2) * (2 * ell - q - 1))
    kk = -k
    return Fraction(4 * q * i - 2 * ell + 1, (q - 2 * ell + 1) * (4 * q * kk + 2))


def enumerate_flat_connections(prob: SurgeryProblem) -> list[FlatConnectionLabel]:
    """Points of the arc lifts whose first coordinate is an integer.

    Found geometrically: every integer vertical line crossed by the open lift
    segment gives one flat connection, ordered along the segment.
    """
    if prob.k == 0:
        return []
    labels = []
    for ell in range(1, prob.arc_count + 1):
        lift = arc_lift(prob.q, prob.k, ell)
        x0, x1 = lift.start.x, lift.end.x
        lo, hi = min(x0, x1), max(x0, x1)
        xs = range(math.floor(lo) + 1, math.ceil(hi))
        ts = sorted((x - x0) / (x1 - x0) for x in xs)
        labels += [FlatConnectionLabel(ell, i, t) for i, t in enumerate(ts, start=1)]
    return labels


def build_flat_path(prob: SurgeryProblem, label: FlatConnectionLabel) -> Path:
    lift = arc_lift(prob.q, prob.k, label.ell)
    end = lift.at(label.t)
    if end.x.denominator != 1:
        raise GeometryError(f"flat path endpoint {end} is not on an integer vertical line")
    path = Path((Segment(ORIGIN, lift.start), Segment(lift.start, end)))
    # the origin is the trivial connection; everything after it must avoid Z^2
    try:
        verify_lattice_avoidance(path, exempt=(ORIGIN,))
    except GeometryError as exc:  # pragma: no cover - impossible for valid labels
        raise AssertionError(f"flat path meets the lattice: {exc}") from exc
    return path


def default_delta(q: int) -> Fraction:
    return Fraction(1, 8 * q)


def build_surgery_loop(path: Path, b: int, delta: Fraction) -> Path:
    """Close the flat path into the loop used to define c.

    The loop runs: small CW quarter circle from (0, delta) to (delta, 0); the
    flat path from (delta, 0) on; |b| right-hand semicircles of radius 1/2
    from (m1, n1) to (m1, n1 - b); back horizontally to the n-axis; and
    down (or up) the n-axis to (0, delta).
    """
    delta = Fraction(delta)
    first = path.pieces[0]
    if not (
        isinstance(first, Segment)
        and first.start == ORIGIN
        and first.end.y == 0
        and first.end.x > delta > 0
    ):
        raise GeometryError("flat path must start with a horizontal segment longer than delta")
    m1, n1 = path.end.x, path.end.y
    if m1.denominator != 1:
        raise GeometryError(f"endpoint {path.end} is not on an integer vertical line")

    pieces: list = [
        Arc(ORIGIN, delta * delta, Point(0, delta), Point(delta, 0), Orientation.CW),
        Segment(Point(delta, 0), first.end),
        *path.pieces[1:],
    ]
    eps = 1 if b > 0 else -1
    # going down along the right side is clockwise, going up is counterclockwise
    turn = Orientation.CW if eps > 0 else Orientation.CCW
    for j in range(1, abs(b) + 1):
        top = Point(m1, n1 - eps * (j - 1))
        bottom = Point(m1, n1 - eps * j)
        center = Point(m1, n1 - eps * Fraction(2 * j - 1, 2))
        pieces.append(Arc(center, Fraction(1, 4), top, bottom, turn))
    level = n1 - b
    corner = Point(0, level)
    if m1 != 0:
        pieces.append(Segment(Point(m1, level), corner))
    if level != delta:
        pieces.append(Segment(corner, Point(0, delta)))
    loop = Path(tuple(pieces), closed=True)
    verify_lattice_avoidance(loop)
    return loop


def abc_invariants(path: Path, delta: Fraction) -> tuple[int, int, int]:
    m1, n1 = path.end.x, path.end.y
    if m1.denominator != 1:
        raise GeometryError(f"endpoint {path.end} is not on an integer vertical line")
    if n1.denominator == 1:
        raise GeometryError(f"endpoint {path.end} is a lattice point")
    a = int(m1)
    b = math.floor(n1)
    c = -2 * lattice_linking(build_surgery_loop(path, b, delta))
    return a, b, c


def knot_complement_spectral_flow(path: Path, knot: TorusKnot) -> int:
    """C^2 spectral flow on the knot complement along the flat path.

    The reducible part is the initial horizontal segment from the origin;
    each jumping point it crosses contributes 2.  The rest of the path runs
    through irreducibles, where the twisted cohomology has constant
    dimension and so contributes nothing.
    """
    first = path.pieces[0]
    if not (
        isinstance(first, Segment)
        and first.start == ORIGIN
        and first.end.y == 0
        and first.end.x > 0
    ):
        raise GeometryError("reducible part must be an increasing horizontal segment from 0")
    reach = first.end.x
    jumps = jumping_points(knot)
    if reach in jumps:
        raise GeometryError("reducible path stops on a jumping point")
    return 2 * sum(1 for s in jumps if s < reach)


def invariants(prob: SurgeryProblem, label: FlatConnectionLabel,
               delta: Fraction | None = None) -> InvariantRecord:
    if prob.k == 0:
        raise ValueError("S^3 has no nontrivial flat connections")
    if delta is None:
        delta = default_delta(prob.q)
    path = build_flat_path(prob, label)
    a, b, c = abc_invariants(path, delta)
    sf_z = knot_complement_spectral_flow(path, prob.knot)
    sf_y = gauge.solid_torus_spectral_flow(gauge.power_word(a, b))
    integral = path_integral_two_n_mprime(path)
    sf = sf_z + sf_y - 2
    cs = -c + integral
    kernel_dim = 0
    rho = 2 * sf - 4 * cs + 2 - kernel_dim
    return InvariantRecord(prob.q, prob.k, label.ell, label.i, a, b, c, sf_z,
                           integral, sf, cs, rho, kernel_dim)


def all_invariants(q: int, k: int) -> list[InvariantRecord]:
    """Records for every flat connection, sorted by (ell, i)."""
    return list(_all_invariants(q, k, tuple(sorted(gauge.SPECTRAL_FLOW_CONSTANTS.items()))))


@lru_cache(maxsize=None)
def _all_invariants(q: int, k: int, _constants) -> tuple[InvariantRecord, ...]:
    # keyed on the gauge constants so a patched constant is never served stale
    prob = SurgeryProblem(q, k)
    return tuple(invariants(prob, label) for label in enumerate_flat_connections(prob))
