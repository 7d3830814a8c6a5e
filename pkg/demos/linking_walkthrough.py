"""How c is read off a closed loop around the integer lattice.

Builds the surgery loop for the second flat connection on +1 surgery on the
trefoil, lists its pieces and counts the enclosed lattice points.

Run:  python3 demos/linking_walkthrough.py
"""

from __future__ import annotations

from torus_surgery import engine
from torus_surgery.engine import SurgeryProblem
from torus_surgery.geometry import lattice_bounding_box, lattice_linking, winding_number, Point

prob = SurgeryProblem(3, 1)
label = engine.enumerate_flat_connections(prob)[1]
path = engine.build_flat_path(prob, label)
a, b, c = engine.abc_invariants(path, engine.default_delta(prob.q))
loop = engine.build_surgery_loop(path, b, engine.default_delta(prob.q))

print(f"flat path ends at {path.end}: a = {a}, b = {b}")
print("surgery loop pieces:")
for piece in loop:
    print(f"  {piece}")

xmin, xmax, ymin, ymax = lattice_bounding_box(loop)
for y in range(ymax, ymin - 1, -1):
    row = []
    for x in range(xmin, xmax + 1):
        w = winding_number(loop, Point(x, y))
        row.append(f"{w:+d}" if w else " .")
    print(f"  y = {y:>2}: " + " ".join(row))
print(f"lattice linking {lattice_linking(loop)}, so c = {c}")
