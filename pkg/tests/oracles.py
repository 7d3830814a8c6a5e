"""Independent reference implementations used only by the tests.

Nothing here imports the geometry module's predicates: the winding oracle
counts quadrant transitions instead of ray crossings.
"""

from __future__ import annotations

import random
from fractions import Fraction


def _quadrant(x: Fraction, y: Fraction) -> int:
    if x > 0 and y >= 0:
        return 0
    if x <= 0 and y > 0:
        return 1
    if x < 0 and y <= 0:
        return 2
    return 3


def on_segment(p, a, b) -> bool:
    (px, py), (ax, ay), (bx, by) = p, a, b
    if (bx - ax) * (py - ay) - (by - ay) * (px - ax) != 0:
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def on_polygon(p, vertices) -> bool:
    n = len(vertices)
    return any(on_segment(p, vertices[j], vertices[(j + 1) % n]) for j in range(n))


def quadrant_winding(vertices, p) -> int:
    """Winding number of the closed polygon about p by summing quarter turns."""
    px, py = p
    n = len(vertices)
    quarter_turns = 0
    for j in range(n):
        ax, ay = vertices[j][0] - px, vertices[j][1] - py
        bx, by = vertices[(j + 1) % n][0] - px, vertices[(j + 1) % n][1] - py
        step = (_quadrant(bx, by) - _quadrant(ax, ay)) % 4
        if step == 1:
            quarter_turns += 1
        elif step == 3:
            quarter_turns -= 1
        elif step == 2:
            # opposite quadrants: the side of p decides which way we went round
            quarter_turns += 2 if ax * by - ay * bx > 0 else -2
    assert quarter_turns % 4 == 0
    return quarter_turns // 4


def brute_lattice_linking(vertices) -> int:
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    total = 0
    for x in range(int(min(xs)) - 1, int(max(xs)) + 2):
        for y in range(int(min(ys)) - 1, int(max(ys)) + 2):
            total += quadrant_winding(vertices, (Fraction(x), Fraction(y)))
    return total


def random_rational(rng: random.Random, lo: int, hi: int, max_den: int = 20) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_polygon(rng: random.Random, max_vertices: int = 12, span: int = 4):
    """Random (possibly self-intersecting) rational polygon without repeated consecutive vertices."""
    n = rng.randint(3, max_vertices)
    verts: list[tuple[Fraction, Fraction]] = []
    while len(verts) < n:
        v = (random_rational(rng, -span, span), random_rational(rng, -span, span))
        if not verts or v != verts[-1]:
            verts.append(v)
    if verts[0] == verts[-1]:
        verts.pop()
    return verts


def random_lattice_free_polygon(rng: random.Random, max_vertices: int = 12, span: int = 3):
    """Random polygon whose edges miss every lattice point."""
    while True:
        verts = random_polygon(rng, max_vertices, span)
        if len(verts) < 3:
            continue
        lattice = [(Fraction(x), Fraction(y)) for x in range(-span - 1, span + 2)
                   for y in range(-span - 1, span + 2)]
        if not any(on_polygon(p, verts) for p in lattice):
            return verts


def polygon_corpus(count: int, seed: int = 2024):
    rng = random.Random(seed)
    return [random_lattice_free_polygon(rng) for _ in range(count)]


def lk_from_sums(k: int, i: int) -> int:
    """c for the (ell, i) connection from the closed sum of b-values."""
    kk = abs(k)
    if k > 0:
        return -2 * sum(_floor_div(-j, kk) for j in range(1, i))
    return 2 * sum(_floor_div(-j, kk) for j in range(1, i + 1))


def _floor_div(a: int, b: int) -> int:
    return a // b
