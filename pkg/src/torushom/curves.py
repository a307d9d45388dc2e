"""Hilbert schemes and compactified Jacobians of x^m = y^n, combinatorially.

Torus-fixed points of both moduli spaces are subsets of Z>=0 invariant under
adding m and n; their attracting cells are parametrized by canonical forms
whose closure condition we certify by counting solutions over small prime
fields.  The node xy = 0 is special-cased from its known classification.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import factorial, gcd
from typing import Optional, Sequence

from .algebra import GradedTable, LaurentPoly, series_truncate, table_monomial_ratio

JACOBIAN = "jacobian"
HILB = "hilb"

CELL_PRIMES = (2, 3, 5)
_ASSIGNMENT_BUDGET = 10**6


@dataclass(frozen=True)
class Semigroup:
    """Numerical semigroup generated by coprime m, n."""

    m: int
    n: int
    conductor: int
    delta: int
    gaps: tuple[int, ...]

    @staticmethod
    def of(m: int, n: int) -> "Semigroup":
        if m < 1 or n < 1:
            raise ValueError("semigroup generators must be positive")
        if gcd(m, n) != 1:
            raise ValueError(f"generators must be coprime, gcd({m},{n})={gcd(m, n)}")
        conductor = (m - 1) * (n - 1)
        member = [False] * (conductor + 1)
        member[0] = True
        for j in range(1, conductor + 1):
            member[j] = (j >= m and member[j - m]) or (j >= n and member[j - n])
        gaps = tuple(j for j in range(conductor) if not member[j])
        assert len(gaps) == conductor // 2
        return Semigroup(m, n, conductor, conductor // 2, gaps)

    def member(self, j: int) -> bool:
        if j < 0:
            return False
        if j >= self.conductor:
            return True
        return j not in self._gap_set

    @cached_property
    def _gap_set(self) -> frozenset:
        return frozenset(self.gaps)


def semigroup(m: int, n: int) -> Semigroup:
    return Semigroup.of(m, n)


def rational_catalan(m: int, n: int) -> int:
    """(m+n-1)! / (m! n!), exactly."""
    if gcd(m, n) != 1:
        raise ValueError("rational Catalan numbers need coprime arguments")
    value, rem = divmod(factorial(m + n - 1), factorial(m) * factorial(n))
    assert rem == 0
    return value


def lattice_path_count(m: int, n: int) -> int:
    """Monotone paths NW -> SE across the m x n rectangle staying weakly
    below the diagonal, by dynamic programming."""
    if gcd(m, n) != 1:
        raise ValueError("lattice path count needs coprime arguments")
    bound = m * n

    def ok(x, y):
        return m * x + n * y <= bound

    counts = {(0, m): 1}
    for x in range(0, n + 1):
        for y in range(m, -1, -1):
            if (x, y) == (0, m) or not ok(x, y):
                continue
            counts[(x, y)] = counts.get((x - 1, y), 0) + counts.get((x, y + 1), 0)
    return counts.get((n, 0), 0)


@dataclass(frozen=True)
class GammaModule:
    """Subset of Z>=0 closed under adding m and n, over window [0, span);
    every ambient exponent >= span belongs to the module."""

    sem: Semigroup
    mode: str
    bits: tuple[bool, ...]

    def __post_init__(self):
        if self.mode not in (JACOBIAN, HILB):
            raise ValueError(f"unknown mode {self.mode!r}")
        m, n = self.sem.m, self.sem.n
        # Canonical window: extend with ambient membership, then trim the
        # all-present tail to conductor/last-gap + max(m, n), so that equal
        # modules built over different windows compare equal.
        bits = list(self.bits)
        last_missing = max(
            (j for j, b in enumerate(bits) if not b), default=-1
        )
        required = max(self.sem.conductor, last_missing + 1) + max(m, n)
        while len(bits) < required:
            j = len(bits)
            bits.append(True if self.mode == JACOBIAN else self.sem.member(j))
        object.__setattr__(self, "bits", tuple(bits[:required]))
        span = len(self.bits)
        for j in range(span):
            if not self.bits[j]:
                continue
            for s in (m, n):
                if j + s < span and not self.bits[j + s]:
                    raise ValueError(f"not closed: {j} in module but {j + s} not")
        if self.mode == JACOBIAN:
            if not self.bits or not self.bits[0]:
                raise ValueError("jacobian modules must contain 0")
        else:
            for j in range(span):
                if self.bits[j] and not self.sem.member(j):
                    raise ValueError("hilb ideals must sit inside the semigroup")

    @property
    def span(self) -> int:
        return len(self.bits)

    def member(self, j: int) -> bool:
        if j < 0:
            return False
        if j >= self.span:
            return True
        return self.bits[j]

    def minimal_generators(self) -> tuple[int, ...]:
        m, n = self.sem.m, self.sem.n
        return tuple(
            j
            for j in range(self.span)
            if self.bits[j] and not self.member(j - m) and not self.member(j - n)
        )

    def colength(self) -> int:
        """|Gamma \\ Delta| in hilb mode; number of missing ambient exponents
        in jacobian mode."""
        if self.mode == HILB:
            return sum(
                1 for j in range(self.span) if self.sem.member(j) and not self.bits[j]
            )
        return sum(1 for j in range(self.span) if not self.bits[j])

    def trailing_exponents(self, g: int) -> tuple[int, ...]:
        """Exponents h > g outside the module (inside the semigroup in hilb
        mode) that can carry a cell parameter."""
        out = []
        for h in range(g + 1, self.span):
            if self.bits[h]:
                continue
            if self.mode == HILB and not self.sem.member(h):
                continue
            out.append(h)
        return tuple(out)

    def bits_str(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


def _jacobian_span(sem: Semigroup) -> int:
    return sem.conductor + max(sem.m, sem.n)


def enumerate_jacobian_modules(m: int, n: int) -> list[GammaModule]:
    """All 0-normalized (m, n)-invariant subsets of Z>=0."""
    sem = Semigroup.of(m, n)
    span = _jacobian_span(sem)
    base = [sem.member(j) for j in range(span)]
    gaps_desc = sorted(sem.gaps, reverse=True)
    results: list[GammaModule] = []

    def closed_with(chosen: set, h: int) -> bool:
        return all(sem.member(h + s) or (h + s) in chosen for s in (m, n))

    def rec(idx: int, chosen: set):
        if idx == len(gaps_desc):
            bits = list(base)
            for h in chosen:
                bits[h] = True
            results.append(GammaModule(sem, JACOBIAN, tuple(bits)))
            return
        h = gaps_desc[idx]
        rec(idx + 1, chosen)
        if closed_with(chosen, h):
            chosen.add(h)
            rec(idx + 1, chosen)
            chosen.remove(h)

    rec(0, set())
    return sorted(results, key=lambda d: d.bits)


def enumerate_hilb_ideals(m: int, n: int, k: int) -> list[GammaModule]:
    """All semigroup ideals Delta of colength k."""
    if k < 0:
        raise ValueError("colength must be >= 0")
    sem = Semigroup.of(m, n)
    level: set[frozenset] = {frozenset()}
    for _ in range(k):
        nxt: set[frozenset] = set()
        for removed in level:
            candidates = {0} if not removed else set()
            for r in removed:
                for s in (m, n):
                    candidates.add(r + s)
            for x in candidates:
                if x in removed or not sem.member(x):
                    continue
                if all(not sem.member(x - s) or (x - s) in removed for s in (m, n)):
                    nxt.add(removed | {x})
        level = nxt
    out = []
    for removed in level:
        top = max(removed) if removed else 0
        span = max(sem.conductor, top + 1) + max(m, n)
        bits = tuple(sem.member(j) and j not in removed for j in range(span))
        out.append(GammaModule(sem, HILB, bits))
    return sorted(out, key=lambda d: d.bits)


@dataclass(frozen=True)
class CellRecord:
    module: GammaModule
    generators: tuple[int, ...]
    parameters: tuple[tuple[int, int], ...]
    dimension: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "delta_bits": self.module.bits_str(),
                "generators": list(self.generators),
                "dimension": self.dimension,
            }
        )


def _module_closes(
    mod: GammaModule, gens: Sequence[int], assignment: dict, p: int
) -> bool:
    """Whether the span of the parametrized generators is closed with order
    set exactly the module: build a triangular basis, reducing each product
    by t^m, t^n; any leading exponent outside the module is a failure."""
    m, n = mod.sem.m, mod.sem.n
    span = mod.span
    basis: dict[int, dict[int, int]] = {}

    def reduce(vec: dict[int, int]) -> dict[int, int]:
        while vec:
            lead = min(vec)
            hit = basis.get(lead)
            if hit is None:
                return vec
            c = vec[lead]
            for e, v in hit.items():
                s = (vec.get(e, 0) - c * v) % p
                if s:
                    vec[e] = s
                else:
                    vec.pop(e, None)
        return vec

    def insert(vec: dict[int, int]) -> bool:
        vec = reduce(vec)
        if not vec:
            return True
        lead = min(vec)
        if not mod.member(lead):
            return False
        inv = pow(vec[lead], -1, p)
        basis[lead] = {e: (v * inv) % p for e, v in vec.items()}
        pending.append(lead)
        return True

    pending: list[int] = []
    for g in gens:
        vec = {g: 1}
        for h in mod.trailing_exponents(g):
            c = assignment.get((g, h), 0) % p
            if c:
                vec[h] = c
        if not insert(vec):
            return False
    while pending:
        d = pending.pop()
        for s in (m, n):
            if d + s >= span:
                continue
            shifted = {e + s: c for e, c in basis[d].items() if e + s < span}
            if not insert(shifted):
                return False
    return True


def cell_dimension(
    mod: GammaModule, p_set: Sequence[int] = CELL_PRIMES
) -> CellRecord:
    """Certify the attracting cell of a fixed point as an affine space by
    counting closed parameter assignments over each prime field."""
    gens = mod.minimal_generators()
    params = tuple((g, h) for g in gens for h in mod.trailing_exponents(g))
    dims = []
    for p in p_set:
        if p ** len(params) > _ASSIGNMENT_BUDGET:
            raise ValueError(
                f"parameter space {p}^{len(params)} exceeds the counting budget"
            )
        count = 0
        for values in itertools.product(range(p), repeat=len(params)):
            assignment = dict(zip(params, values))
            if _module_closes(mod, gens, assignment, p):
                count += 1
        d = next((e for e in range(len(params) + 1) if p**e == count), None)
        if d is None:
            raise ArithmeticError(
                f"cell not affine as computed: count {count} over F_{p}"
            )
        dims.append(d)
    if len(set(dims)) > 1:
        raise ArithmeticError(
            f"cell not affine as computed: dimensions {dims} disagree across primes"
        )
    return CellRecord(mod, gens, params, dims[0])


def jacobian_cells(m: int, n: int) -> list[CellRecord]:
    return [cell_dimension(mod) for mod in enumerate_jacobian_modules(m, n)]


def jacobian_poincare(m: int, n: int) -> dict[int, int]:
    """t-degree -> count over the cells of the compactified Jacobian."""
    out: dict[int, int] = {}
    for cell in jacobian_cells(m, n):
        key = 2 * cell.dimension
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


def hilb_level_poincare(m: int, n: int, k: int) -> dict[int, int]:
    """t-degree -> count over the cells of Hilb^k."""
    out: dict[int, int] = {}
    for mod in enumerate_hilb_ideals(m, n, k):
        cell = cell_dimension(mod)
        key = 2 * cell.dimension
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


def hilb_poincare_series(m: int, n: int, kmax: int) -> GradedTable:
    """sum_k q^k (sum_cells t^{2 dim}) for 0 <= k <= kmax."""
    entries: dict[tuple[int, int, int], int] = {}
    for k in range(kmax + 1):
        for td, c in hilb_level_poincare(m, n, k).items():
            entries[(k, td, 0)] = entries.get((k, td, 0), 0) + c
    return GradedTable.build(entries, kmax)


def node_hilb(kmax: int) -> GradedTable:
    """Hilbert scheme series of the node xy = 0: points in sizes 0 and 1,
    a chain of k-1 projective lines in size k >= 2."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    entries: dict[tuple[int, int, int], int] = {}
    for k in range(kmax + 1):
        entries[(k, 0, 0)] = 1
        if k >= 2:
            entries[(k, 2, 0)] = k - 1
    return GradedTable.build(entries, kmax)


# Documented regrading between the Hilbert-scheme series and the a=0 homology
# series: t -> 1/(q t^2), with any leftover normalization reported as an
# overall monomial ratio.
ORS_T_IMAGE = LaurentPoly.monomial(1, eq=-1, et=-2)


@dataclass(frozen=True)
class OrsReport:
    m: int
    n: int
    kmax: int
    success: bool
    ratio: Optional[tuple[int, int, int]]
    hilb_table: GradedTable
    homology_table: GradedTable

    def render(self) -> str:
        status = "match" if self.success else "MISMATCH"
        ratio = (
            f" ratio q^{self.ratio[0]}*t^{self.ratio[1]}"
            if self.success and self.ratio is not None
            else ""
        )
        return f"ors({self.m},{self.n}) kmax={self.kmax}: {status}{ratio}"


def ors_compare(m: int, n: int, kmax: int) -> OrsReport:
    """Compare the Hilbert scheme series with the regraded a=0 homology
    series on the common truncation window."""
    from .recursion import hhh_a0

    hilb = hilb_poincare_series(m, n, kmax)
    regraded = hhh_a0(m, n).substitute("t", ORS_T_IMAGE)
    homology = series_truncate(regraded, kmax)
    ratio = table_monomial_ratio(hilb, homology)
    return OrsReport(m, n, kmax, ratio is not None, ratio, hilb, homology)


def euler_compare(
    m: int, n: int, kmax: int
) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Check the point-count (Euler characteristic) shadow: the Hilbert
    series at t=1 against the q-only homology specialization."""
    from .recursion import euler_a0

    hilb = hilb_poincare_series(m, n, kmax)
    flat = GradedTable.build(
        {(eq, 0, 0): c for eq, c in hilb.specialize_t1().items()}, kmax
    )
    target = series_truncate(euler_a0(m, n), kmax)
    ratio = table_monomial_ratio(flat, target)
    return ratio is not None, ratio


def node_euler(kmax: int) -> dict[int, int]:
    return node_hilb(kmax).specialize_t1()
