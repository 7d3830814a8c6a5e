from __future__ import annotations

import random

from hypothesis import given
from hypothesis import strategies as st

from torus_surgery import gauge
from torus_surgery.gauge import ALPHA, BETA, GAMMA, IDENTITY, GaugeWord, Letter

L = Letter
words = st.lists(st.sampled_from(list(Letter)), max_size=30)
ab_words = st.lists(st.sampled_from([L.ALPHA, L.ALPHA_INV, L.BETA, L.BETA_INV]), max_size=30)
elements = st.builds(GaugeWord, *(st.integers(-50, 50) for _ in range(3)))


def test_multiplication_examples():
    assert GaugeWord(0, 1, 0) * GaugeWord(1, 0, 0) == GaugeWord(1, 1, 2)
    assert GaugeWord(4, -3, 7) * IDENTITY == GaugeWord(4, -3, 7)


def test_commutator():
    assert gauge.commutator(ALPHA, BETA) == GaugeWord(0, 0, -2)
    assert gauge.word_to_normal_form([L.ALPHA, L.BETA, L.ALPHA_INV, L.BETA_INV]) == GaugeWord(0, 0, -2)


def test_inverse_examples():
    assert ALPHA.inverse() == GaugeWord(-1, 0, 0)
    assert GaugeWord(1, 1, 0).inverse() == GaugeWord(-1, -1, 2)
    assert GaugeWord(0, 0, 5).inverse() == GaugeWord(0, 0, -5)


def test_degree_examples():
    assert GaugeWord(1, 1, 0).degree == -1
    assert GAMMA.degree == 1
    rng = random.Random(3)
    for _ in range(50):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        assert gauge.degree(GaugeWord(a, b, a * b)) == 0


def test_word_examples():
    assert gauge.word_to_normal_form([L.BETA, L.ALPHA]) == GaugeWord(1, 1, 2)
    assert gauge.word_to_normal_form([]) == IDENTITY


def test_spectral_flow_examples():
    assert gauge.solid_torus_spectral_flow([L.ALPHA, L.ALPHA, L.ALPHA, L.BETA]) == 4
    assert gauge.solid_torus_spectral_flow([L.GAMMA]) == -2
    assert gauge.solid_torus_spectral_flow([]) == 0


def test_associativity_on_random_triples():
    rng = random.Random(11)
    for _ in range(1000):
        g1, g2, g3 = (GaugeWord(*(rng.randint(-50, 50) for _ in range(3))) for _ in range(3))
        assert (g1 * g2) * g3 == g1 * (g2 * g3)


@given(elements, st.integers(-50, 50))
def test_gamma_powers_are_central(g, n):
    z = GaugeWord(0, 0, n)
    assert g * z == z * g


@given(elements)
def test_degree_shifts_by_gamma(g):
    assert (g * GAMMA).degree == g.degree + 1


@given(elements)
def test_inverse_is_two_sided(g):
    assert g * g.inverse() == IDENTITY == g.inverse() * g


@given(words)
def test_word_times_inverse_word_is_trivial(w):
    assert gauge.word_to_normal_form(w + gauge.inverse_word(w)) == IDENTITY


@given(ab_words)
def test_spectral_flow_of_ab_words(w):
    g = gauge.word_to_normal_form(w)
    assert gauge.solid_torus_spectral_flow(w) == 2 * (g.a - g.b)


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
def test_power_word_spells_the_normal_form(a, b, c):
    assert gauge.word_to_normal_form(gauge.power_word(a, b, c)) == GaugeWord(a, b, c)


def test_constants_solve_the_gluing_equations():
    k = gauge.SPECTRAL_FLOW_CONSTANTS
    assert 2 * k["alpha"] + k["beta"] == 2
    assert 2 * k["alpha"] + 2 * k["beta"] == 0
    assert gauge.constants_consistent()


def test_constants_check_detects_a_fault(monkeypatch):
    monkeypatch.setitem(gauge.SPECTRAL_FLOW_CONSTANTS, "beta", 2)
    assert not gauge.constants_consistent()


def test_big_words_stay_exact():
    g = GaugeWord(10**12, 10**12, 0) * GaugeWord(10**12, -(10**12), 0)
    assert g.c == 2 * 10**24
