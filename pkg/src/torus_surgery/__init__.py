"""Exact gauge-theoretic invariants of 1/k surgery on (2, q) torus knots.

Two independent routes compute the C^2 spectral flow, Chern-Simons and rho
invariants of every flat SU(2) connection: :mod:`.engine` walks the holonomy
path in the plane, :mod:`.closed_form` evaluates the closed formulas.  Both
use :class:`fractions.Fraction` throughout, so results compare exactly.
"""

from __future__ import annotations

from .closed_form import (
    CassonRecord,
    FormulaValues,
    UnsupportedKnot,
    brieskorn_identification,
    finite_type_witness,
    lambda_double_prime,
    lambda_su3,
    two_q,
)
from .engine import (
    FlatConnectionLabel,
    InvariantRecord,
    SurgeryProblem,
    all_invariants,
    enumerate_flat_connections,
    invariants,
)
from .gauge import GaugeWord
from .geometry import Arc, Path, Point, Segment, lattice_linking, winding_number
from .repvar import (
    TorusKnot,
    alexander_polynomial,
    arc_lift,
    bifurcation_points,
    jumping_points,
)

__all__ = [
    "Arc", "CassonRecord", "FlatConnectionLabel", "FormulaValues", "GaugeWord",
    "InvariantRecord", "Path", "Point", "Segment", "SurgeryProblem", "TorusKnot",
    "UnsupportedKnot", "alexander_polynomial", "all_invariants", "arc_lift",
    "bifurcation_points", "brieskorn_identification", "enumerate_flat_connections",
    "finite_type_witness", "invariants", "jumping_points", "lambda_double_prime",
    "lambda_su3", "lattice_linking", "two_q", "winding_number",
]
