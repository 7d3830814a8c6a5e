"""Special reducibles and arc lifts for a few torus knots.

Run:  python3 demos/representation_varieties.py
"""

from __future__ import annotations

from torus_surgery.repvar import (
    TorusKnot,
    alexander_polynomial,
    arc_lift,
    bifurcation_points,
    jumping_points,
    unshear,
)


def fmt(points) -> str:
    return "{" + ", ".join(str(s) for s in points) + "}"


for p, q in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]:
    knot = TorusKnot(p, q)
    print(f"T({p}, {q}): Delta = {alexander_polynomial(knot)}")
    print(f"  jumping points     {fmt(jumping_points(knot))}")
    if p == 2:
        print(f"  bifurcation points {fmt(bifurcation_points(knot))}")

print()
q = 5
for k in (1, -1, 2):
    print(f"arc lifts for {'-' if k < 0 else ''}1/{abs(k)} surgery on T(2, {q})")
    for ell in range(1, (q - 1) // 2 + 1):
        lift = arc_lift(q, k, ell)
        a, b = unshear(lift.start, k), unshear(lift.end, k)
        print(f"  R_{ell}: {lift.start} -> {lift.end}, slope after unshearing "
              f"{(b.y - a.y) / (b.x - a.x)}")
