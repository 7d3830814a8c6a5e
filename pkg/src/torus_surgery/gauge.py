"""The discrete gauge group G of normal-form connections on the solid torus.

G is the central extension of Z^2 (generated by alpha, beta) by Z (generated
by gamma) with the single nontrivial relation ``[alpha, beta] = gamma^-2``.
Elements are stored in the normal form ``alpha^a beta^b gamma^c``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class GaugeWord:
    a: int = 0
    b: int = 0
    c: int = 0

    def __mul__(self, other: "GaugeWord") -> "GaugeWord":
        return multiply(self, other)

    def inverse(self) -> "GaugeWord":
        return inverse(self)

    @property
    def degree(self) -> int:
        return degree(self)

    def __str__(self) -> str:
        return f"alpha^{self.a} beta^{self.b} gamma^{self.c}"


IDENTITY = GaugeWord(0, 0, 0)
ALPHA = GaugeWord(1, 0, 0)
BETA = GaugeWord(0, 1, 0)
GAMMA = GaugeWord(0, 0, 1)


def multiply(g1: GaugeWord, g2: GaugeWord) -> GaugeWord:
    return GaugeWord(g1.a + g2.a, g1.b + g2.b, 2 * g1.b * g2.a + g1.c + g2.c)


def inverse(g: GaugeWord) -> GaugeWord:
    return GaugeWord(-g.a, -g.b, -g.c + 2 * g.a * g.b)


def commutator(g1: GaugeWord, g2: GaugeWord) -> GaugeWord:
    return g1 * g2 * inverse(g1) * inverse(g2)


def degree(g: GaugeWord) -> int:
    return g.c - g.a * g.b


class Letter(enum.Enum):
    ALPHA = ("alpha", 1)
    ALPHA_INV = ("alpha", -1)
    BETA = ("beta", 1)
    BETA_INV = ("beta", -1)
    GAMMA = ("gamma", 1)
    GAMMA_INV = ("gamma", -1)

    @property
    def generator(self) -> str:
        return self.value[0]

    @property
    def exponent(self) -> int:
        return self.value[1]

    def inverse(self) -> "Letter":
        return _LETTER_BY_VALUE[(self.generator, -self.exponent)]

    def as_word(self) -> GaugeWord:
        g = _GENERATORS[self.generator]
        return g if self.exponent > 0 else inverse(g)


_LETTER_BY_VALUE = {letter.value: letter for letter in Letter}
_GENERATORS = {"alpha": ALPHA, "beta": BETA, "gamma": GAMMA}

# Spectral flow on the solid torus (P+ boundary conditions) along the Cayley
# graph edges g*E_alpha, g*E_beta, g*E_gamma; independent of the base point g.
SPECTRAL_FLOW_CONSTANTS = {"alpha": 2, "beta": -2, "gamma": -2}


def word_to_normal_form(letters: Iterable[Letter]) -> GaugeWord:
    g = IDENTITY
    for letter in letters:
        g = g * letter.as_word()
    return g


def inverse_word(letters: Sequence[Letter]) -> list[Letter]:
    return [letter.inverse() for letter in reversed(letters)]


def power_word(a: int = 0, b: int = 0, c: int = 0) -> list[Letter]:
    """Letters spelling ``alpha^a beta^b gamma^c``."""
    out: list[Letter] = []
    for n, pos, neg in ((a, Letter.ALPHA, Letter.ALPHA_INV),
                        (b, Letter.BETA, Letter.BETA_INV),
                        (c, Letter.GAMMA, Letter.GAMMA_INV)):
        out += [pos if n > 0 else neg] * abs(n)
    return out


def solid_torus_spectral_flow(letters: Iterable[Letter]) -> int:
    """C^2 spectral flow along the Cayley-graph path spelled by ``letters``."""
    k = SPECTRAL_FLOW_CONSTANTS
    return sum(letter.exponent * k[letter.generator] for letter in letters)


def constants_consistent() -> bool:
    """Check the two gluing equations that pin down k_alpha and k_beta.

    Gluing two solid tori along the boundary maps used to derive the
    constants gives total spectral flow 2 and 0 respectively; an interior
    gauge transformation g contributes -2 deg(g), which fixes k_gamma.
    """
    ka = SPECTRAL_FLOW_CONSTANTS["alpha"]
    kb = SPECTRAL_FLOW_CONSTANTS["beta"]
    kc = SPECTRAL_FLOW_CONSTANTS["gamma"]
    return 2 * ka + kb == 2 and 2 * ka + 2 * kb == 0 and kc == -2 * degree(GAMMA)
