"""Cross-verification suites binding the three pipelines together.

Each suite runs a batch of named checks; a failing check is recorded and
never aborts the rest of the suite.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable

from . import curves, hecke, recursion, soergel
from .algebra import A, LaurentPoly, ONE, Q, RatFunc, T, series_truncate
from .braid import (
    BraidWord,
    closure_components,
    cyclic_rotate,
    half_twist,
    longest_permutation,
    identity_permutation,
    permutation_length,
    torus_braid,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str
    seconds: float

    def render(self, with_timing: bool = True) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.name}"
        if not self.passed:
            line += f"\n    expected: {self.expected}\n    actual:   {self.actual}"
        if with_timing:
            line += f"  ({self.seconds:.2f}s)"
        return line


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self, with_timing: bool = True) -> str:
        lines = [c.render(with_timing) for c in self.checks]
        passed = sum(c.passed for c in self.checks)
        lines.append(f"{self.suite}: {passed}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "passed": self.all_passed,
                "checks": [
                    {
                        "name": c.name,
                        "passed": c.passed,
                        "expected": c.expected,
                        "actual": c.actual,
                        "seconds": round(c.seconds, 3),
                    }
                    for c in self.checks
                ],
            }
        )


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[CheckResult] = []

    def check(self, name: str, expected, actual) -> None:
        start = time.perf_counter()
        try:
            exp_val = expected() if callable(expected) else expected
            act_val = actual() if callable(actual) else actual
            passed = exp_val == act_val
            exp_str, act_str = repr(exp_val), repr(act_val)
        except Exception as exc:  # a failed check must not abort the suite
            passed = False
            exp_str = repr(expected)
            act_str = f"raised {type(exc).__name__}: {exc}"
        self.checks.append(
            CheckResult(name, passed, exp_str, act_str, time.perf_counter() - start)
        )

    def report(self) -> VerificationReport:
        return VerificationReport(self.name, self.checks)


def _qpoly(coeffs: dict[int, int]) -> hecke.QPoly:
    return hecke.QPoly(coeffs)


# -- suite 1: recursion against the displayed tables --------------------------

def suite_hm_paper_tables() -> VerificationReport:
    s = _Suite("hm-paper-tables")
    t_inv = LaurentPoly.monomial(1, et=-1)
    s.check(
        "hhh(2,2) = t^-1 (1+a)(t+q-qt+a)/(1-q)^2",
        RatFunc.of(t_inv * (ONE + A) * (T + Q - Q * T + A), 2),
        lambda: recursion.hhh_torus(2, 2),
    )
    for k in range(1, 6):
        geom = LaurentPoly(
            {(0, i, -i): 1 for i in range(k + 1)}
        )
        s.check(
            f"hhh_a0(2,{2 * k + 1}) = (sum q^i t^-i, i<={k})/(1-q)",
            RatFunc.of(geom, 1),
            lambda m=2 * k + 1: recursion.hhh_a0(2, m),
        )
    s.check(
        "term_census_a(3,4) = [(0,5),(1,5),(2,1)]",
        [(0, 5), (1, 5), (2, 1)],
        lambda: recursion.term_census_a(3, 4),
    )
    return s.report()


# -- suite 2: two-strand Soergel oracle ---------------------------------------

def suite_two_strand_oracle() -> VerificationReport:
    s = _Suite("two-strand-oracle")
    for m in range(0, 13):
        s.check(
            f"hhh0_two_strand({m}) = series of hhh_a0(2,{m}), internal deg <= 20",
            lambda m=m: soergel.qt_table_within(recursion.hhh_a0(2, m), 20, -m),
            lambda m=m: soergel.two_strand_qt_dims(m, 20),
        )
    return s.report()


# -- suite 3: braid variety closed forms --------------------------------------

def suite_braid_variety_closed_forms() -> VerificationReport:
    s = _Suite("braid-variety-closed-forms")
    e = identity_permutation(2)
    s.check(
        "#X(s^3) = q^2 - q",
        _qpoly({2: 1, 1: -1}),
        lambda: hecke.point_count(torus_braid(2, 3), e),
    )
    s.check(
        "#X(s^4) = q^3 - q^2 + q",
        _qpoly({3: 1, 2: -1, 1: 1}),
        lambda: hecke.point_count(torus_braid(2, 4), e),
    )
    s.check(
        "#X(s^5) = q (q^3 - q^2 + q - 1)",
        _qpoly({1: 1}) * _qpoly({3: 1, 2: -1, 1: 1, 0: -1}),
        lambda: hecke.point_count(torus_braid(2, 5), e),
    )
    return s.report()


# -- suite 4: Hecke transfer vs brute force -----------------------------------

def _positive_words(max_strands: int, max_len: int) -> Iterable[BraidWord]:
    for n in range(1, max_strands + 1):
        gens = range(1, n)
        for ell in range(0, max_len + 1):
            if ell > 0 and n == 1:
                continue
            for word in itertools.product(gens, repeat=ell):
                yield BraidWord.make(n, list(word))


def suite_hecke_vs_brute(
    max_strands: int = 3, max_len: int = 7, primes=(2, 3, 5), threads: int = 1
) -> VerificationReport:
    s = _Suite("hecke-vs-brute")
    t0 = time.perf_counter()
    mismatches = []
    divisibility_failures = []
    rotation_failures = []
    words = 0
    for b in _positive_words(max_strands, max_len):
        words += 1
        e = identity_permutation(b.strands)
        w0 = longest_permutation(b.strands)
        mass = hecke.braid_transfer_product(b)
        for w, coeff in mass.support:
            if not coeff.divisible_by_power_of_q(permutation_length(w)):
                divisibility_failures.append((b.word_str(), w))
        counts = {t: hecke.point_count(b, t) for t in (e, w0)}
        for k in range(1, len(b.letters)):
            if hecke.point_count(cyclic_rotate(b, k), e) != counts[e]:
                rotation_failures.append((b.word_str(), k))
        for p in primes:
            brute = hecke._enumerate_counts(b, [e, w0], p, threads)
            for target, got in zip((e, w0), brute):
                want = counts[target].evaluate(p)
                if got != want:
                    mismatches.append((b.word_str(), b.strands, target, p, got, want))
    elapsed = time.perf_counter() - t0
    s.check(
        f"brute force = transfer count on {words} words, "
        f"len <= {max_len}, strands <= {max_strands}, p in {tuple(primes)} "
        f"({elapsed:.1f}s)",
        [],
        mismatches,
    )
    s.check("q^len(w) divides every transfer coefficient", [], divisibility_failures)
    s.check("e-count is invariant under cyclic rotation", [], rotation_failures)
    return s.report()


# -- suite 5: knot divisibility ------------------------------------------------

def suite_knot_divisibility() -> VerificationReport:
    s = _Suite("knot-divisibility")
    failures = []
    tested = 0
    for m, kmax in ((2, 9), (3, 7)):
        for k in range(kmax + 1):
            for b in (torus_braid(m, k), torus_braid(m, k).concat(half_twist(m))):
                if closure_components(b) != 1:
                    continue
                tested += 1
                count = hecke.point_count(b, identity_permutation(m))
                if not count.divisible_by_q_minus_1_power(m - 1):
                    failures.append((m, k, count.render()))
    s.check(
        f"(q-1)^(n-1) divides #X for {tested} torus/half-twist words closing to knots",
        [],
        failures,
    )
    return s.report()


# -- suite 6: Catalan triple -----------------------------------------------------

def suite_catalan_triple() -> VerificationReport:
    s = _Suite("catalan-triple")
    failures = []
    pairs = 0
    for m in range(1, 14):
        for n in range(m + 1, 15 - m):
            if gcd(m, n) != 1:
                continue
            pairs += 1
            modules = len(curves.enumerate_jacobian_modules(m, n))
            catalan = curves.rational_catalan(m, n)
            paths = curves.lattice_path_count(m, n)
            if not modules == catalan == paths:
                failures.append((m, n, modules, catalan, paths))
    s.check(
        f"module count = rational Catalan = path count on {pairs} coprime pairs, m+n <= 14",
        [],
        failures,
    )
    s.check("c(3,4) = 5", 5, lambda: curves.rational_catalan(3, 4))
    return s.report()


# -- suite 7: Jacobian cells ---------------------------------------------------

def suite_jacobian_cells() -> VerificationReport:
    s = _Suite("jacobian-cells")
    for k in range(1, 5):
        s.check(
            f"jac(2,{2 * k + 1}) cell dimensions are 0..{k}",
            sorted(range(k + 1)),
            lambda k=k: sorted(c.dimension for c in curves.jacobian_cells(2, 2 * k + 1)),
        )
    s.check(
        "jac(3,4) cell dimensions are {3,2,2,1,0}",
        [0, 1, 2, 2, 3],
        lambda: sorted(c.dimension for c in curves.jacobian_cells(3, 4)),
    )
    for m, n in ((2, 3), (2, 5), (2, 7), (2, 9), (3, 4)):
        s.check(
            f"max jac({m},{n}) cell dimension = delta",
            curves.semigroup(m, n).delta,
            lambda m=m, n=n: max(c.dimension for c in curves.jacobian_cells(m, n)),
        )
    return s.report()


# -- suite 8: Hilbert scheme series ---------------------------------------------

def suite_hilb_series() -> VerificationReport:
    s = _Suite("hilb-series")
    for k in (1, 2):
        num = LaurentPoly({(0, 2 * i, 2 * i): 1 for i in range(k + 1)})
        s.check(
            f"hilb(2,{2 * k + 1}) series = (1 + ... + q^{2 * k} t^{2 * k})/(1-q), kmax=8",
            series_truncate(RatFunc.of(num, 1), 8),
            lambda m=2 * k + 1: curves.hilb_poincare_series(2, m, 8),
        )
    node_expected = RatFunc.of(ONE, 1) + RatFunc.of(
        LaurentPoly.monomial(1, eq=2, et=2), 2
    )
    s.check(
        "node series = 1/(1-q) + q^2 t^2/(1-q)^2, kmax=8",
        series_truncate(node_expected, 8),
        lambda: curves.node_hilb(8),
    )
    for m, n in ((2, 3), (2, 5), (2, 7), (3, 4)):
        delta = curves.semigroup(m, n).delta
        s.check(
            f"hilb({m},{n}) levels stabilize for k >= 2 delta = {2 * delta}",
            lambda m=m, n=n, d=delta: [
                curves.hilb_level_poincare(m, n, 2 * d)
            ]
            * 3,
            lambda m=m, n=n, d=delta: [
                curves.hilb_level_poincare(m, n, k) for k in range(2 * d, 2 * d + 3)
            ],
        )
        s.check(
            f"stable hilb({m},{n}) level = jacobian cell table",
            lambda m=m, n=n: curves.jacobian_poincare(m, n),
            lambda m=m, n=n, d=delta: curves.hilb_level_poincare(m, n, 2 * d),
        )
    return s.report()


# -- suite 9: ORS and Euler comparisons -----------------------------------------

def suite_ors_maulik() -> VerificationReport:
    s = _Suite("ors-maulik")
    for m, n in ((2, 3), (2, 5), (2, 7), (3, 4)):
        s.check(
            f"ors({m},{n}) kmax=10: regraded homology matches hilb series",
            True,
            lambda m=m, n=n: curves.ors_compare(m, n, 10).success,
        )
        s.check(
            f"euler({m},{n}) kmax=10: hilb series at t=1 matches euler_a0",
            (True, (0, 0, 0)),
            lambda m=m, n=n: curves.euler_compare(m, n, 10),
        )
    return s.report()


# -- suite 10: q-t symmetry -------------------------------------------------------

def suite_qt_symmetry() -> VerificationReport:
    s = _Suite("qt-symmetry")
    for m, n in ((2, 3), (2, 5), (2, 7), (3, 4), (3, 5)):
        s.check(
            f"reduced({m},{n}) is symmetric in q and t",
            lambda m=m, n=n: recursion.reduced_knot_poly(m, n),
            lambda m=m, n=n: recursion.reduced_knot_poly(m, n).swap_qt(),
        )
        s.check(
            f"reduced({m},{n}) at q=t=1 = a=0 census count",
            lambda m=m, n=n: dict(recursion.term_census_a(m, n)).get(0, 0),
            lambda m=m, n=n: sum(
                recursion.reduced_knot_poly(m, n).evaluate_qt1().values()
            ),
        )
    return s.report()


SUITES: dict[str, Callable[[], VerificationReport]] = {
    "hm-paper-tables": suite_hm_paper_tables,
    "two-strand-oracle": suite_two_strand_oracle,
    "braid-variety-closed-forms": suite_braid_variety_closed_forms,
    "hecke-vs-brute": suite_hecke_vs_brute,
    "knot-divisibility": suite_knot_divisibility,
    "catalan-triple": suite_catalan_triple,
    "jacobian-cells": suite_jacobian_cells,
    "hilb-series": suite_hilb_series,
    "ors-maulik": suite_ors_maulik,
    "qt-symmetry": suite_qt_symmetry,
}


def run_verifications(suite: str = "all", threads: int = 1) -> list[VerificationReport]:
    """Run one named suite, or all of them in a fixed order."""

    def build(name: str) -> VerificationReport:
        if name == "hecke-vs-brute":
            return suite_hecke_vs_brute(threads=threads)
        return SUITES[name]()

    if suite == "all":
        return [build(name) for name in SUITES]
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; known: {', '.join(SUITES)} or all")
    return [build(suite)]
