"""Independent two-strand oracle: explicit complexes and their homology.

For the k-th power of the positive crossing on two strands, the relevant
complex of free modules over R = C[x1, x2] (deg x_i = 2) is

    R(-2k) -> R(-2k+2) -> ... -> R(-2) -> R

with k+1 terms, the map into the rightmost R being multiplication by
x1 - x2 and the labels alternating (zero, x1-x2, zero, ...) leftwards.
Homology is computed degreewise by exact integer linear algebra on monomial
bases, independently of the recursion pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import RatFunc, qta_degree_from_QTA, series_truncate

MULT = "x1-x2"
ZERO = "zero"


@dataclass(frozen=True)
class TwoStrandComplex:
    length: int                 # k, the crossing power
    shifts: tuple[int, ...]     # internal shifts, leftmost first: -2k .. 0
    labels: tuple[str, ...]     # labels[j] is the map out of position j+1

    def label_out_of(self, position: int) -> str:
        """Differential leaving `position` (counted from the right, 0-based)."""
        return self.labels[position - 1]


def hom_complex_two_strand(k: int) -> TwoStrandComplex:
    if k < 0:
        raise ValueError("crossing power must be >= 0")
    shifts = tuple(-2 * j for j in range(k, -1, -1))
    labels = tuple(MULT if j % 2 == 1 else ZERO for j in range(1, k + 1))
    return TwoStrandComplex(k, shifts, labels)


def _monomials(degree: int) -> list[tuple[int, int]]:
    """Monomials x1^a x2^b of internal degree `degree` (deg x_i = 2)."""
    if degree < 0 or degree % 2 != 0:
        return []
    s = degree // 2
    return [(a, s - a) for a in range(s + 1)]


def _mult_matrix(degree: int) -> list[list[int]]:
    """Matrix of multiplication by x1 - x2 from degree to degree + 2."""
    src = _monomials(degree)
    dst = {mono: i for i, mono in enumerate(_monomials(degree + 2))}
    rows = [[0] * len(src) for _ in dst]
    for col, (a, b) in enumerate(src):
        rows[dst[(a + 1, b)]][col] += 1
        rows[dst[(a, b + 1)]][col] -= 1
    return rows


def _rank(matrix: list[list[int]]) -> int:
    """Exact rank by fraction-free Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class BigradedDims:
    """Map (internal degree, homological degree) -> dim, complete for
    internal degrees <= cutoff."""

    dims: tuple[tuple[tuple[int, int], int], ...]
    cutoff: int

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.dims)


def hhh0_two_strand(m: int, cutoff: int) -> BigradedDims:
    """Bigraded homology dimensions of the two-strand complex for T(2, m).

    Keys are (internal degree, homological degree); the homological degree
    of position j from the right is -j.
    """
    cx = hom_complex_two_strand(m)
    out: dict[tuple[int, int], int] = {}
    for d in range(0, cutoff + 1, 2):
        for j in range(m + 1):
            local = d - 2 * j  # internal degree inside R(-2j)
            dim_here = len(_monomials(local))
            if dim_here == 0:
                continue
            # Outgoing differential (position j -> j-1).
            if j == 0:
                ker = dim_here
            elif cx.label_out_of(j) == MULT:
                ker = dim_here - _rank(_mult_matrix(local))
            else:
                ker = dim_here
            # Incoming differential (position j+1 -> j).
            img = 0
            if j + 1 <= m and cx.labels[j] == MULT:
                incoming = d - 2 * (j + 1)
                if incoming >= 0:
                    img = _rank(_mult_matrix(incoming))
            h = ker - img
            if h:
                out[(d, -j)] = h
    return BigradedDims(tuple(sorted(out.items())), cutoff)


def bigraded_to_qt(table: BigradedDims) -> dict[tuple[int, int], int]:
    """Convert (internal degree, homological degree) keys to (e_q, e_t)."""
    out: dict[tuple[int, int], int] = {}
    for (d, hom), dim in table.dims:
        eq, et, _ = qta_degree_from_QTA(d, hom, 0)
        out[(eq, et)] = out.get((eq, et), 0) + dim
    return out


def qt_table_within(r: RatFunc, internal_cutoff: int, min_hom: int) -> dict[tuple[int, int], int]:
    """Truncated expansion of r restricted to the window where the two-strand
    table with the given cutoff is complete: internal degree <= cutoff and
    homological degree >= min_hom."""
    depth = internal_cutoff // 2  # e_q = (d + hom)/2 <= d/2
    table = series_truncate(r, depth)
    out = {}
    for (eq, et, ea), c in table.entries:
        if ea != 0:
            raise ValueError("two-strand comparison expects an a=0 series")
        d = 2 * eq - 2 * et
        hom = 2 * et
        if d <= internal_cutoff and hom >= min_hom:
            out[(eq, et)] = c
    return out


def two_strand_qt_dims(m: int, internal_cutoff: int) -> dict[tuple[int, int], int]:
    """Homology table of T(2, m) in (e_q, e_t) coordinates."""
    return bigraded_to_qt(hhh0_two_strand(m, internal_cutoff))
