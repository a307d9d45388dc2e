"""Poincare series of positive torus links via the binary-pair recursion.

The series p(v, w) is indexed by pairs of 0/1 strings with equally many 1s
and is pinned down by five rewriting rules; p(0^m, 0^n) is the graded rank
of the triply graded homology of the torus link T(m, n).  The all-zero pair
is self-referential under the last rule and is resolved algebraically,
which keeps every denominator a power of (1 - q).
"""

from __future__ import annotations

import sys
from math import gcd

from .algebra import (
    A,
    LaurentPoly,
    ONE,
    Q,
    RatFunc,
    divide_by_one_plus_a,
    lp_substitute_monomial,
    ratfunc_normalize,
)

MAX_PAIR_LENGTH = 64  # memo blow-up guard

_MEMO: dict[tuple[str, str], RatFunc] = {}

_BASE = RatFunc.of(ONE + A, 1)  # (1+a)/(1-q)


def _t_pow(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, et=k)


def _validate(v: str, w: str) -> None:
    if set(v) - {"0", "1"} or set(w) - {"0", "1"}:
        raise ValueError("binary sequences must consist of 0s and 1s")
    if v.count("1") != w.count("1"):
        raise ValueError(f"unbalanced pair: {v!r} has {v.count('1')} ones, "
                         f"{w!r} has {w.count('1')}")
    if len(v) + len(w) > MAX_PAIR_LENGTH:
        raise ValueError(f"total sequence length exceeds {MAX_PAIR_LENGTH}")


def pair_series(v: str, w: str) -> RatFunc:
    """The rational function attached to a balanced pair of binary strings."""
    _validate(v, w)
    # Rule-5 chains advance one position at a time; keep plenty of headroom.
    if sys.getrecursionlimit() < 20000:
        sys.setrecursionlimit(20000)
    return _p(v, w)


def _p(v: str, w: str) -> RatFunc:
    key = (v, w)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if not v or not w:
        # The other string is all zeros (the 1-counts match).
        n = len(v) + len(w)
        res = RatFunc.of((ONE + A) ** n, n)
    else:
        last = (v[-1], w[-1])
        if last == ("1", "1"):
            ell = v.count("1") - 1
            res = RatFunc.from_poly(_t_pow(ell) + A) * _p(v[:-1], w[:-1])
        elif last == ("0", "1"):
            res = _p(v[:-1], "1" + w[:-1])
        elif last == ("1", "0"):
            res = _p("1" + v[:-1], w[:-1])
        elif "1" not in v and "1" not in w:
            # Self-referential case: p = p(1v', 1w') + q p  =>  p = p(1v', 1w')/(1-q).
            inner = _p("1" + v[:-1], "1" + w[:-1])
            res = ratfunc_normalize(inner.num, inner.denom_pow + 1)
        else:
            ell = v.count("1")
            head = RatFunc.from_poly(_t_pow(-ell)) * _p("1" + v[:-1], "1" + w[:-1])
            tail = (
                RatFunc.from_poly(LaurentPoly.monomial(1, eq=1, et=-ell))
                * _p("0" + v[:-1], "0" + w[:-1])
            )
            res = head + tail
    _MEMO[key] = res
    return res


def clear_memo() -> None:
    _MEMO.clear()


def hhh_torus(m: int, n: int) -> RatFunc:
    """Graded rank of the triply graded homology of T(m, n)."""
    if m < 0 or n < 0:
        raise ValueError("torus link indices must be >= 0")
    return pair_series("0" * m, "0" * n)


def hhh_a0(m: int, n: int) -> RatFunc:
    """The a=0 (Hochschild degree zero) specialization."""
    return hhh_torus(m, n).substitute("a", None)


def euler_a0(m: int, n: int) -> RatFunc:
    """Euler-characteristic specialization: a -> 0 then t -> 1/q."""
    return hhh_a0(m, n).substitute("t", LaurentPoly.monomial(1, eq=-1))


def _knot_numerator(m: int, n: int) -> LaurentPoly:
    r = hhh_torus(m, n)
    if r.denom_pow > 1:
        raise ValueError(
            f"residual denominator (1-q)^{r.denom_pow - 1}: T({m},{n}) is not a knot"
        )
    return r.num if r.denom_pow == 1 else r.num * (ONE - Q)


def reduced_numerator(m: int, n: int) -> LaurentPoly:
    """The finite-dimensional (reduced) part of the knot homology: clear the
    (1-q) series factor and the unknot factor (1+a)."""
    if gcd(m, n) != 1:
        raise ValueError(f"T({m},{n}) is not a knot: gcd={gcd(m, n)}")
    reduced = divide_by_one_plus_a(_knot_numerator(m, n))
    if reduced is None:
        raise ArithmeticError(f"(1+a) does not divide the T({m},{n}) numerator")
    return reduced


def term_census_a(m: int, n: int) -> list[tuple[int, int]]:
    """Monomial counts of the reduced knot numerator per a-degree."""
    return list(reduced_numerator(m, n).a_degrees().items())


def reduced_knot_poly(m: int, n: int) -> LaurentPoly:
    """(1-q) * hhh_a0(m, n), renormalized so the minimal t-degree is zero."""
    if gcd(m, n) != 1:
        raise ValueError(f"T({m},{n}) is not a knot: gcd={gcd(m, n)}")
    if m < 1 or n < 1:
        raise ValueError("reduced numerator needs m, n >= 1")
    num = lp_substitute_monomial(_knot_numerator(m, n), "a", None)
    return num * LaurentPoly.monomial(1, et=-num.min_t_degree())
