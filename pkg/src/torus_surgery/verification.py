"""Cross-checks between the geometric engine, the closed forms and the tables."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import closed_form as cf
from . import engine, gauge


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    counterexample: str | None = None
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _run(name: str, cases: Iterator[tuple[bool, str]]) -> SuiteResult:
    result = SuiteResult(name)
    for ok, desc in cases:
        result.checks += 1
        if not ok:
            result.counterexample = desc
            break
    return result


def _tup(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _signed_ks(k_max: int) -> list[int]:
    return [k for k in range(-k_max, k_max + 1) if k]


def engine_vs_closed_form(q_set: Iterable[int], k_max: int) -> SuiteResult:
    def cases():
        for q in q_set:
            for k in _signed_ks(k_max):
                records = engine.all_invariants(q, k)
                prob = engine.SurgeryProblem(q, k)
                yield len(records) == prob.expected_count, (
                    f"(q, k) = ({q}, {k}): {len(records)} records, expected {prob.expected_count}"
                )
                for r in records:
                    f = cf.two_q(q, k, r.ell, r.i)
                    got = (r.sf, r.cs, r.rho)
                    yield got == tuple(f), (
                        f"(q, k, ell, i) = ({q}, {k}, {r.ell}, {r.i}): "
                        f"engine (sf, cs, rho) = {_tup(got)}, closed form = {_tup(f)}"
                    )
                    yield r.rho == r.rho_from_abc(), (
                        f"(q, k, ell, i) = ({q}, {k}, {r.ell}, {r.i}): "
                        f"rho = {r.rho} but from (a, b, c) = {r.rho_from_abc()}"
                    )
    return _run("engine vs closed form", cases())


def floor_identity_suite(q_max: int, k_max: int) -> SuiteResult:
    def cases():
        for q, k, ell, i in cf.floor_identity_domain(q_max, k_max):
            yield cf.floor_identities(q, k, ell, i), (
                f"(q, k, ell, i) = ({q}, {k}, {ell}, {i}): floors {cf.floor_terms(q, k, ell, i)}"
            )
    return _run("floor identities", cases())


def casson_table_suite(q_set: Iterable[int], k_max: int) -> SuiteResult:
    qs = [q for q in q_set if q in cf.SUPPORTED_Q]
    unsupported = [q for q in q_set if q not in cf.SUPPORTED_Q]

    def cases():
        for q in qs:
            for k in range(-k_max, k_max + 1):
                ldp = cf.lambda_double_prime(q, k)
                want = cf.table_lambda_double_prime(q, k)
                yield ldp == want, f"(q, k) = ({q}, {k}): lambda'' = {ldp}, table {want}"
                total = cf.lambda_su3(q, k).total
                want = cf.table_lambda(q, k)
                yield total == want, f"(q, k) = ({q}, {k}): lambda = {total}, table {want}"
                if q == 3:
                    yield total == cf.trefoil_lambda(k), (
                        f"(q, k) = (3, {k}): lambda = {total}, trefoil formula {cf.trefoil_lambda(k)}"
                    )

    result = _run("Casson tables", cases())
    if unsupported:
        qs_text = ", ".join(map(str, unsupported))
        result.skipped = f"q={qs_text} skipped: SU(3) representation counts are not tabulated"
    return result


def group_algebra_suite(trials: int = 1000, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    G = gauge.GaugeWord

    def cases():
        yield gauge.commutator(gauge.ALPHA, gauge.BETA) == G(0, 0, -2), "[alpha, beta] != gamma^-2"
        yield gauge.constants_consistent(), (
            f"spectral flow constants {gauge.SPECTRAL_FLOW_CONSTANTS} violate the gluing equations"
        )
        for _ in range(trials):
            a, b, c = (rng.randint(-50, 50) for _ in range(3))
            g = G(a, b, c)
            word = gauge.power_word(a, b, c)
            yield gauge.word_to_normal_form(word) == g, f"normal form of {g}"
            yield gauge.degree(g) == c - a * b, f"degree of {g}"
            yield gauge.degree(g * gauge.GAMMA) == gauge.degree(g) + 1, f"deg(g gamma) for {g}"
            letters = [rng.choice([gauge.Letter.ALPHA, gauge.Letter.ALPHA_INV,
                                   gauge.Letter.BETA, gauge.Letter.BETA_INV])
                       for _ in range(rng.randint(0, 20))]
            nf = gauge.word_to_normal_form(letters)
            sf = gauge.solid_torus_spectral_flow(letters)
            yield sf == 2 * (nf.a - nf.b), f"spectral flow of {letters}: {sf} vs {nf}"
    return _run("group algebra", cases())


def run_all(q_set: Iterable[int], k_max: int, floor_q_max: int = 15,
            floor_k_max: int = 6) -> list[SuiteResult]:
    """Run every suite in order, stopping after the first one that fails."""
    q_set = list(q_set)
    suites = [
        lambda: engine_vs_closed_form(q_set, k_max),
        lambda: floor_identity_suite(max(floor_q_max, *q_set), max(floor_k_max, k_max)),
        lambda: casson_table_suite(q_set, k_max),
        lambda: group_algebra_suite(),
    ]
    results = []
    for suite in suites:
        results.append(suite())
        if not results[-1].passed:
            break
    return results
