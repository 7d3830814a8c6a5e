"""Closed-form invariants for 1/k surgery on (2, q) torus knots.

Here ``[x]`` is always the mathematical floor.  Negative surgeries are written
with a positive ``k`` and handled by the separate ``*_negative`` formulas; the
Casson-invariant helpers take a signed ``k`` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import engine


class FormulaValues(NamedTuple):
    sf: int
    cs: Fraction
    rho: Fraction


def _floor_div(a: int, b: int) -> int:
    return math.floor(Fraction(a, b))


def _check_label(q: int, k: int, ell: int, i: int) -> None:
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    if k < 1:
        raise ValueError(f"k must be positive here, got {k}")
    if not 1 <= ell <= (q - 1) // 2:
        raise ValueError(f"ell out of range: {ell}")
    if not 1 <= i <= k * (q + 1 - 2 * ell):
        raise ValueError(f"i out of range: {i}")


def trefoil_positive(k: int, i: int) -> FormulaValues:
    _check_label(3, k, 1, i)
    f1 = _floor_div(i, k + 1)
    f2 = _floor_div(i, k + 2)
    sq = Fraction((12 * i - 11) ** 2)
    sf = 2 - 2 * i + 2 * f1
    cs = 2 - 2 * i + (2 * k - 2 * i + 2) * f2 + sq / (24 * (6 * k - 1))
    rho = 4 * i - 2 + 4 * f1 + 8 * (i - k - 1) * f2 - sq / (6 * (6 * k - 1))
    return FormulaValues(sf, cs, rho)


def trefoil_negative(k: int, i: int) -> FormulaValues:
    """Values for -1/k surgery on the trefoil (``k > 0``)."""
    _check_label(3, k, 1, i)
    f1 = _floor_div(i, k + 1)
    sq = Fraction((12 * i - 1) ** 2)
    sf = 2 * i + 2 * f1
    cs = 2 * i + (2 * i - 2 * k) * f1 - sq / (24 * (6 * k + 1))
    rho = 2 - 4 * i + 4 * (2 * k - 2 * i + 1) * f1 + sq / (6 * (6 * k + 1))
    return FormulaValues(sf, cs, rho)


def _floor_sum(k: int, upto: int) -> int:
    return sum(_floor_div(-j, k) for j in range(1, upto + 1))


def two_q_positive(q: int, k: int, ell: int, i: int) -> FormulaValues:
    _check_label(q, k, ell, i)
    half_ell = ell // 2
    fi = _floor_div(-i, k)
    s = _floor_sum(k, i - 1)
    sq = Fraction((4 * q * (1 - i) - 2 * ell + 1) ** 2)
    sf = 2 * half_ell - 2 * i - 2 * fi
    cs = sq / (4 * q * (4 * q * k - 2)) + 2 * s
    rho = 4 * half_ell + 2 - 4 * i - sq / (q * (4 * q * k - 2)) - 4 * fi - 8 * s
    return FormulaValues(sf, cs, rho)


def two_q_negative(q: int, k: int, ell: int, i: int) -> FormulaValues:
    """Values for -1/k surgery on K(2, q) (``k > 0``)."""
    _check_label(q, k, ell, i)
    half_ell = ell // 2
    fi = _floor_div(-i, k)
    s = _floor_sum(k, i)
    sq = Fraction((4 * q * i - 2 * ell + 1) ** 2)
    sf = 2 * half_ell + 2 * i - 2 - 2 * fi
    cs = -sq / (4 * q * (4 * q * k + 2)) - 2 * s
    rho = 4 * half_ell - 2 + 4 * i + sq / (q * (4 * q * k + 2)) - 4 * fi + 8 * s
    return FormulaValues(sf, cs, rho)


def two_q(q: int, k: int, ell: int, i: int) -> FormulaValues:
    """Dispatch on the sign of a signed surgery coefficient ``k``."""
    if k > 0:
        return two_q_positive(q, k, ell, i)
    if k < 0:
        return two_q_negative(q, -k, ell, i)
    raise ValueError("S^3 has no nontrivial flat connections")


def floor_terms(q: int, k: int, ell: int, i: int) -> tuple[int, int, int]:
    return (
        _floor_div(4 * q * (1 - i) - 2 * ell + 1, 4 * q * k - 2),
        _floor_div(-i, k),
        _floor_div(2 * ell - 4 * q * i - 1, 4 * q * k + 2),
    )


def floor_identities(q: int, k: int, ell: int, i: int) -> bool:
    x, y, z = floor_terms(q, k, ell, i)
    return x == y == z


def floor_identity_domain(q_max: int, k_max: int):
    """Every (q, k, ell, i) with 3 <= q <= q_max, 1 <= k <= k_max in the lemma's domain."""
    for q in range(3, q_max + 1):
        for k in range(1, k_max + 1):
            for ell in range(1, (q - 1) // 2 + 1):
                for i in range(1, k * (q - 2 * ell + 1) + 1):
                    yield q, k, ell, i


# ---------------------------------------------------------------------------
# SU(3) Casson invariant

SUPPORTED_Q = (3, 5, 7, 9)

# count of irreducible SU(3) representations, quadratic in k
_LAMBDA_PRIME = {3: (3, -1), 5: (33, -9), 7: (138, -26), 9: (390, -58)}

# tabulated correction term: numerator cubic / (2q (2q k - 1))
_LAMBDA_DOUBLE_PRIME = {
    3: (-24, -84, 13),
    5: (-200, -1620, 151),
    7: (-784, -9128, 606),
    9: (-2160, -33192, 1714),
}
_LAMBDA = {
    3: (84, -138, 19),
    5: (3100, -2850, 241),
    7: (26264, -16156, 970),
    9: (124200, -59004, 2758),
}


class UnsupportedKnot(ValueError):
    pass


def _require_table(q: int) -> None:
    if q not in SUPPORTED_Q:
        raise UnsupportedKnot(f"SU(3) representation counts are only tabulated for q in {SUPPORTED_Q}")


def lambda_prime(q: int, k: int) -> int:
    _require_table(q)
    c2, c1 = _LAMBDA_PRIME[q]
    return c2 * k * k + c1 * k


def _cubic_over(q: int, k: int, coeffs) -> Fraction:
    c3, c2, c1 = coeffs
    return Fraction(c3 * k**3 + c2 * k**2 + c1 * k, 2 * q * (2 * q * k - 1))


def table_lambda_double_prime(q: int, k: int) -> Fraction:
    _require_table(q)
    return _cubic_over(q, k, _LAMBDA_DOUBLE_PRIME[q])


def table_lambda(q: int, k: int) -> Fraction:
    _require_table(q)
    return _cubic_over(q, k, _LAMBDA[q])


def trefoil_lambda(k: int) -> Fraction:
    return Fraction(k * (84 * k * k - 138 * k + 19), 6 * (6 * k - 1))


def rho_values(q: int, k: int, route: str = "engine") -> list[Fraction]:
    """Rho invariants of all irreducible flat connections on 1/k surgery."""
    if k == 0:
        return []
    if route == "engine":
        return [r.rho for r in engine.all_invariants(q, k)]
    if route == "formula":
        return [two_q(q, k, lab.ell, lab.i).rho
                for lab in engine.enumerate_flat_connections(engine.SurgeryProblem(q, k))]
    raise ValueError(f"unknown route {route!r}")


def lambda_double_prime(q: int, k: int, route: str = "engine") -> Fraction:
    """Correction term as a signed half-sum of rho invariants.

    The su(2) spectral flow of every irreducible is odd for positive and even
    for negative surgery, which fixes the overall sign.
    """
    total = sum(rho_values(q, k, route), Fraction(0))
    return -total / 2 if k > 0 else total / 2


@dataclass(frozen=True)
class CassonRecord:
    lambda_prime: int
    lambda_double_prime: Fraction
    total: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", self.lambda_prime + self.lambda_double_prime)


def lambda_su3(q: int, k: int, route: str = "engine") -> CassonRecord:
    _require_table(q)
    return CassonRecord(lambda_prime(q, k), lambda_double_prime(q, k, route))


def brieskorn_identification(q: int, k: int) -> tuple[int, tuple[int, int, int]]:
    """Oriented Brieskorn sphere homeomorphic to 1/k surgery on K(2, q).

    Returns ``(sign, (2, q, r))`` meaning the surgery is ``sign * Sigma(2, q, r)``.
    """
    if k == 0:
        raise ValueError("1/0 surgery is S^3")
    if k > 0:
        return -1, (2, q, 2 * q * k - 1)
    return 1, (2, q, 2 * q * -k + 1)


# ---------------------------------------------------------------------------
# finite type witness


def casson_su2_trefoil(k: int) -> int:
    """Casson's invariant of 1/k surgery on the trefoil: k * Delta''(1) / 2."""
    second_derivative = Fraction(1 - 3 * 3, 4)
    return int(k * second_derivative / 2)


@dataclass
class FiniteTypeReport:
    ks: tuple[int, ...]
    rows: list[tuple[int, int, int, Fraction]]
    rank: int
    augmented_rank: int
    notes: str

    @property
    def inconsistent(self) -> bool:
        return self.augmented_rank > self.rank


def _rank(matrix: list[list[Fraction]]) -> int:
    m = [list(map(Fraction, row)) for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def finite_type_witness(ks=(1, -1, 2, -2, 3), route: str = "engine") -> FiniteTypeReport:
    """Show lambda_SU(3) is not a low-order finite type invariant on trefoil surgeries.

    An invariant of the form A (lambda_2 + 12 lambda_SU(2)) + B lambda_SU(2)^2
    takes values x * L + y * L^2 on 1/k surgeries of a fixed knot, where
    L = lambda_SU(2)(X_k) is linear in k: both Casson's invariant and the
    second Ohtsuki invariant satisfy surgery formulas polynomial in k of
    degree at most 2, and all terms vanish at k = 0.  Each k gives one row
    ``x * L + y * L^2 = lambda_SU(3)(X_k)`` in the two unknowns (x, y).
    """
    rows = []
    for k in ks:
        L = casson_su2_trefoil(k)
        value = lambda_su3(3, k, route).total if k else Fraction(0)
        rows.append((k, L, L * L, value))
    coeff = [[Fraction(L), Fraction(L2)] for _, L, L2, _ in rows]
    aug = [[Fraction(L), Fraction(L2), v] for _, L, L2, v in rows]
    notes = (
        "lambda_SU(2)(X_k) = k * Delta''(1) / 2 with Delta''(1) = (1 - q^2)/4 = -2; "
        "the sign convention is the one under which positive surgeries have odd su(2) "
        "spectral flow. The lambda_2 term is absorbed into the polynomial ansatz and "
        "is not computed."
    )
    return FiniteTypeReport(tuple(ks), rows, _rank(coeff) if coeff else 0,
                            _rank(aug) if aug else 0, notes)
