"""Point counting for braid varieties.

Two independent methods:

* a transfer computation in the Iwahori-Hecke algebra of S_n, folding one
  braid letter at a time (fast, output is a polynomial in q);
* brute-force enumeration of the defining matrix equations over a small
  prime field (slow, output is an integer, ground truth).

The variety X(beta; w) consists of tuples (z_1, ..., z_r) such that
B_beta(z) * P_w is upper triangular, where B_beta is the product of the
elementary crossing matrices and P_w the permutation matrix of the target.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .braid import (
    BraidWord,
    Permutation,
    apply_gen,
    identity_permutation,
    inverse_permutation,
    permutation_length,
)


class QPoly:
    """Polynomial in q with integer coefficients and exponents >= 0."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c == 0:
                    continue
                if e < 0:
                    raise ValueError("negative q-exponent in a point-count polynomial")
                clean[e] = c
        self._coeffs = clean

    @staticmethod
    def const(c: int) -> "QPoly":
        return QPoly({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = QPoly.__new__(QPoly)
        res._coeffs = out
        return res

    def __mul__(self, other: "QPoly") -> "QPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = QPoly.__new__(QPoly)
        res._coeffs = out
        return res

    def scale(self, c: int) -> "QPoly":
        return QPoly({e: c * v for e, v in self._coeffs.items()})

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k (k may be negative only if exactly divisible)."""
        if k >= 0:
            return QPoly({e + k: v for e, v in self._coeffs.items()})
        if any(e + k < 0 for e in self._coeffs):
            raise ValueError(f"not divisible by q^{-k}")
        return QPoly({e + k: v for e, v in self._coeffs.items()})

    def divisible_by_power_of_q(self, k: int) -> bool:
        return all(e >= k for e in self._coeffs)

    def evaluate(self, x: int) -> int:
        return sum(c * x**e for e, c in self._coeffs.items())

    def divide_by_q_minus_1(self) -> Optional["QPoly"]:
        """Exact quotient by (q - 1), or None."""
        if self.is_zero():
            return QPoly()
        if self.evaluate(1) != 0:
            return None
        deg = self.degree()
        out: dict[int, int] = {}
        carry = 0  # quotient coefficient at current degree
        for e in range(deg, 0, -1):
            carry = self._coeffs.get(e, 0) + carry
            if carry:
                out[e - 1] = carry
        return QPoly(out)

    def divisible_by_q_minus_1_power(self, k: int) -> bool:
        f: Optional[QPoly] = self
        for _ in range(k):
            f = f.divide_by_q_minus_1()
            if f is None:
                return False
        return True

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{e}" if mag == 1 else f"{mag}*q^{e}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> str:
        dense = {str(e): str(self._coeffs.get(e, 0)) for e in range(self.degree() + 1)}
        return json.dumps({"q_poly": dense})

    @staticmethod
    def from_json(text: str) -> "QPoly":
        data = json.loads(text)["q_poly"]
        return QPoly({int(e): int(c) for e, c in data.items()})

    def __repr__(self) -> str:
        return f"QPoly({self.render()!r})"


@dataclass(frozen=True)
class HeckeElement:
    """Sparse map Permutation -> QPoly; all keys share one strand count."""

    strands: int
    support: tuple[tuple[Permutation, QPoly], ...]

    @staticmethod
    def build(strands: int, support: dict[Permutation, QPoly]) -> "HeckeElement":
        clean = {w: c for w, c in support.items() if not c.is_zero()}
        for w in clean:
            if len(w) != strands:
                raise ValueError("permutation size does not match strand count")
        return HeckeElement(strands, tuple(sorted(clean.items())))

    @staticmethod
    def unit(strands: int) -> "HeckeElement":
        return HeckeElement.build(
            strands, {identity_permutation(strands): QPoly.const(1)}
        )

    def as_dict(self) -> dict[Permutation, QPoly]:
        return dict(self.support)

    def coefficient(self, w: Permutation) -> QPoly:
        return self.as_dict().get(w, QPoly())


_Q = QPoly({1: 1})
_Q_MINUS_1 = QPoly({1: 1, 0: -1})


def _mul_gen(support: dict[Permutation, QPoly], i: int, scaled: bool):
    """Right multiplication by the generator at index i.

    scaled=False is the T-basis rule T_w T_s; scaled=True is the geometric
    transfer rule, whose coefficients are q^len(w) times the T-basis ones
    (each crossing sums over the q points of an affine line of flags).
    """
    out: dict[Permutation, QPoly] = {}

    def bump(w, c):
        prev = out.get(w)
        out[w] = c if prev is None else prev + c

    for w, c in support.items():
        ws = apply_gen(w, i)
        if w[i - 1] < w[i]:  # length goes up
            bump(ws, c * _Q if scaled else c)
        else:
            bump(w, c * _Q_MINUS_1)
            bump(ws, c if scaled else c * _Q)
    return {w: c for w, c in out.items() if not c.is_zero()}


def hecke_mul_gen(h: HeckeElement, i: int) -> HeckeElement:
    """T-basis rule: T_w T_s = T_{ws} if length rises, else
    (q-1) T_w + q T_{ws}."""
    if not 1 <= i <= h.strands - 1:
        raise ValueError(f"generator index {i} out of range")
    return HeckeElement.build(h.strands, _mul_gen(h.as_dict(), i, scaled=False))


def _fold(b: BraidWord, scaled: bool) -> dict[Permutation, QPoly]:
    if not b.is_positive():
        raise ValueError("point counting requires a positive braid word")
    support = {identity_permutation(b.strands): QPoly.const(1)}
    for idx, _ in b.letters:
        support = _mul_gen(support, idx, scaled)
    return support


def braid_hecke_product(b: BraidWord) -> HeckeElement:
    """Left-to-right fold of hecke_mul_gen starting from T_e."""
    return HeckeElement.build(b.strands, _fold(b, scaled=False))


def braid_transfer_product(b: BraidWord) -> HeckeElement:
    """Geometric transfer fold: the coefficient at w counts the z-tuples with
    B_beta(z) in the Bruhat cell of w, and equals q^len(w) times the T-basis
    coefficient."""
    return HeckeElement.build(b.strands, _fold(b, scaled=True))


def point_count(b: BraidWord, target: Permutation) -> QPoly:
    """#X(b; target) over F_q as a polynomial in q.

    Extracts the transfer-product coefficient at target^{-1} and divides it
    exactly by q^len(target): the cell count spreads evenly over the
    q^len(target) cosets refining the cell, and the variety picks the coset
    of the permutation matrix itself.
    """
    if len(target) != b.strands:
        raise ValueError("target permutation size does not match strand count")
    mass = braid_transfer_product(b)
    coeff = mass.coefficient(inverse_permutation(target))
    ell = permutation_length(target)
    if not coeff.divisible_by_power_of_q(ell):
        raise ArithmeticError(
            f"divisibility violated: transfer coefficient {coeff.render()} "
            f"is not divisible by q^{ell}"
        )
    return coeff.shift(-ell)


# -- symbolic braid matrices -------------------------------------------------

class MPoly:
    """Sparse multivariate polynomial over Z in variables z_1..z_r."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self._terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @staticmethod
    def const(nvars: int, c: int) -> "MPoly":
        return MPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def var(nvars: int, j: int) -> "MPoly":
        e = [0] * nvars
        e[j] = 1
        return MPoly(nvars, {tuple(e): 1})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MPoly)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self._terms.items()))))

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.nvars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.nvars, out)

    def render(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"z{j + 1}" for j in range(self.nvars)]
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            body = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            mag = abs(c)
            if not body:
                txt = str(mag)
            elif mag == 1:
                txt = body
            else:
                txt = f"{mag}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + txt)
            else:
                parts.append(("- " if c < 0 else "+ ") + txt)
        return " ".join(parts)


SymbolicMatrix = tuple[tuple[MPoly, ...], ...]


def _identity_matrix(n: int, nvars: int) -> SymbolicMatrix:
    return tuple(
        tuple(MPoly.const(nvars, 1 if i == j else 0) for j in range(n))
        for i in range(n)
    )


def _elementary_matrix(n: int, i: int, z: MPoly) -> SymbolicMatrix:
    """Identity with the 2x2 block [[0,1],[1,z]] at rows/cols i, i+1."""
    nvars = z.nvars
    rows = [
        [MPoly.const(nvars, 1 if r == c else 0) for c in range(n)] for r in range(n)
    ]
    rows[i - 1][i - 1] = MPoly.const(nvars, 0)
    rows[i - 1][i] = MPoly.const(nvars, 1)
    rows[i][i - 1] = MPoly.const(nvars, 1)
    rows[i][i] = z
    return tuple(tuple(r) for r in rows)


def _mat_mul(a: SymbolicMatrix, b: SymbolicMatrix) -> SymbolicMatrix:
    n = len(a)
    nvars = a[0][0].nvars
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = MPoly.const(nvars, 0)
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def braid_matrix_symbolic(b: BraidWord) -> SymbolicMatrix:
    """Exact product of the elementary matrices B_{i_k}(z_k) in word order."""
    if not b.is_positive():
        raise ValueError("braid matrices are defined for positive words")
    r = len(b.letters)
    m = _identity_matrix(b.strands, r)
    for k, (idx, _) in enumerate(b.letters):
        m = _mat_mul(m, _elementary_matrix(b.strands, idx, MPoly.var(r, k)))
    return m


def check_braid_matrix_relation(i: int, n: int) -> bool:
    """B_i(z1) B_{i+1}(z2) B_i(z3) == B_{i+1}(z3) B_i(z2 - z1 z3) B_{i+1}(z1)."""
    if not 1 <= i <= n - 2:
        raise ValueError("need 1 <= i <= n-2")
    z1, z2, z3 = (MPoly.var(3, j) for j in range(3))
    lhs = _mat_mul(
        _mat_mul(_elementary_matrix(n, i, z1), _elementary_matrix(n, i + 1, z2)),
        _elementary_matrix(n, i, z3),
    )
    rhs = _mat_mul(
        _mat_mul(
            _elementary_matrix(n, i + 1, z3),
            _elementary_matrix(n, i, z2 - z1 * z3),
        ),
        _elementary_matrix(n, i + 1, z1),
    )
    return lhs == rhs


# -- brute force over a prime field ------------------------------------------

BRUTE_BUDGET = 10**9
_CHUNK_BITS = 16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _perm_matrix(w: Permutation) -> np.ndarray:
    n = len(w)
    m = np.zeros((n, n), dtype=np.int64)
    for j, wj in enumerate(w):
        m[wj - 1, j] = 1
    return m


def _count_chunk(
    prefix: np.ndarray,
    suffix_indices: Sequence[int],
    z_patterns: list[np.ndarray],
    p: int,
    targets_cols: list[np.ndarray],
    tril: tuple[np.ndarray, np.ndarray],
) -> list[int]:
    size = len(z_patterns[0]) if z_patterns else 1
    arr = np.broadcast_to(prefix, (size,) + prefix.shape).copy()
    for idx, zs in zip(suffix_indices, z_patterns):
        i = idx - 1
        old_i = arr[:, :, i].copy()
        arr[:, :, i] = arr[:, :, i + 1]
        arr[:, :, i + 1] = (old_i + zs[:, None] * arr[:, :, i + 1]) % p
    rows, cols = tril
    counts = []
    for col_order in targets_cols:
        below = arr[:, :, col_order][:, rows, cols]
        counts.append(int((below % p == 0).all(axis=1).sum()))
    return counts


def _enumerate_counts(
    b: BraidWord, targets: Sequence[Permutation], p: int, threads: int = 1
) -> list[int]:
    n = b.strands
    r = len(b.letters)
    indices = [idx for idx, _ in b.letters]
    # Split the word into a sequentially-enumerated prefix and a vectorized
    # suffix small enough to hold in memory.
    suffix_len = r
    while p**suffix_len > (1 << _CHUNK_BITS) and suffix_len > 0:
        suffix_len -= 1
    prefix_len = r - suffix_len
    size = p**suffix_len
    z_patterns = [
        (np.arange(size, dtype=np.int64) // p ** (suffix_len - 1 - j)) % p
        for j in range(suffix_len)
    ]
    targets_cols = [np.array([w - 1 for w in t], dtype=np.intp) for t in targets]
    tril = np.tril_indices(n, -1)

    def prefix_products():
        base = np.eye(n, dtype=np.int64)
        if prefix_len == 0:
            yield base
            return
        for code in range(p**prefix_len):
            m = base.copy()
            rem = code
            digits = []
            for _ in range(prefix_len):
                digits.append(rem % p)
                rem //= p
            digits.reverse()
            for idx, z in zip(indices[:prefix_len], digits):
                i = idx - 1
                old_i = m[:, i].copy()
                m[:, i] = m[:, i + 1]
                m[:, i + 1] = (old_i + z * m[:, i + 1]) % p
            yield m

    work = lambda m: _count_chunk(
        m, indices[prefix_len:], z_patterns, p, targets_cols, tril
    )
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(work, prefix_products()))
    else:
        partials = [work(m) for m in prefix_products()]
    return [sum(part[k] for part in partials) for k in range(len(targets))]


def brute_force_count(
    b: BraidWord, target: Permutation, p: int, threads: int = 1
) -> int:
    """Count tuples z in F_p^r with B_b(z) * P_target upper triangular."""
    if not b.is_positive():
        raise ValueError("brute force requires a positive braid word")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if len(target) != b.strands:
        raise ValueError("target permutation size does not match strand count")
    r = len(b.letters)
    if p**r > BRUTE_BUDGET:
        raise ValueError(
            f"enumeration budget exceeded: need {p**r} > {BRUTE_BUDGET} tuples"
        )
    return _enumerate_counts(b, [target], p, threads)[0]
