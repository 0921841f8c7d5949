"""Grid verification of the inset identities.

Every identity is checked exhaustively over 0 <= m <= m_max, 0 <= n <= n_max,
0 <= k <= m + n + 2, together with every admissible auxiliary parameter p.
Comparisons are exact; there are no tolerances.  A report either passes or
carries the lexicographically first counterexample (m, n, k[, p] ascending,
p innermost).

The thirteen identity names:

    pascal             f(m,n,k) = f(m-1,n,k-1) + f(m-1,n,k)
    vertical           f(m,n,k) = f(m,n-1,k) + f(m+1,n-1,k)
    doubling           f(m,n,k) = 2 f(m,n-1,k) + f(m,n-1,k-1)
    alternating_shift  f(m+1,n-1,k) = sum_i (-1)^i C(p,i) f(m-p+1,n+p-1-i,k)
    horizontal_full    f(m+1,n,k+1) = 2^(n-k-1) C(n,k+1) + sum_{i<=m} f(i,n,k)
    horizontal_tail    f(m+1,n,k+1) = sum_{i<=m} f(i,n,k)      for n <= k
    telescoping        f(m,n,k) - f(m,n-p,k-p) = 2 sum_{i=1..p} f(m,n-i,k-i+1)
    zeros_placement    f(m,n,k) = sum_i C(p,i) f(m+i,n-p,k)    for p <= n
    binomial_sum       f(m,n,k) = sum_i C(n,i) C(m+i,k)
    convolution        f(m,n,k) = sum_{i,j} C(n,i) C(i,j) C(m,k-i+j)
    shifted_window     f(m+k-n,n,k) = sum_i C(n,m-i) C(k+i,k)  for m+k >= n
    parity_shift       f(m,n-p,k-p) == f(m,n,k)  (mod 2)
    first_row          f(0,n,k) = 2^(n-k) C(n,k) for k <= n, else 0

Note the telescoping difference is oriented so both sides are nonnegative;
the reversed orientation fails on the very first nontrivial cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .core import binomial, inset

__all__ = ["Counterexample", "GridReport", "IDENTITY_NAMES", "verify", "verify_all"]

InsetFn = Callable[[int, int, int], int]
# guarded accessor -> None or (params, lhs, rhs)
_Checker = Callable[[InsetFn, int, int, int], Optional[tuple[tuple[int, ...], int, int]]]


@dataclass(frozen=True)
class Counterexample:
    params: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass(frozen=True)
class GridReport:
    identity: str
    m_max: int
    n_max: int
    passed: bool
    counterexample: Counterexample | None


def _check_pascal(f, m, n, k):
    if m < 1:
        return None
    lhs = f(m, n, k)
    rhs = f(m - 1, n, k - 1) + f(m - 1, n, k)
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_vertical(f, m, n, k):
    if n < 1:
        return None
    lhs = f(m, n, k)
    rhs = f(m, n - 1, k) + f(m + 1, n - 1, k)
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_doubling(f, m, n, k):
    if n < 1:
        return None
    lhs = f(m, n, k)
    rhs = 2 * f(m, n - 1, k) + f(m, n - 1, k - 1)
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_alternating_shift(f, m, n, k):
    if n < 1:
        return None
    lhs = f(m + 1, n - 1, k)
    for p in range(m + 1):
        rhs = 0
        for i in range(p + 1):
            term = math.comb(p, i) * f(m - p + 1, n + p - 1 - i, k)
            rhs += -term if i % 2 else term
        if lhs != rhs:
            return ((m, n, k, p), lhs, rhs)
    return None


def _closed_head(n: int, k: int) -> int:
    # 2^(n-k-1) C(n,k+1); zero binomial short-circuits the negative exponent
    if k + 1 > n:
        return 0
    return (1 << (n - k - 1)) * math.comb(n, k + 1)


def _check_horizontal_full(f, m, n, k):
    lhs = f(m + 1, n, k + 1)
    rhs = _closed_head(n, k) + sum(f(i, n, k) for i in range(m + 1))
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_horizontal_tail(f, m, n, k):
    if not n <= k <= m + n:
        return None
    lhs = f(m + 1, n, k + 1)
    rhs = sum(f(i, n, k) for i in range(m + 1))
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_telescoping(f, m, n, k):
    for p in range(1, min(n, k) + 1):
        lhs = f(m, n, k) - f(m, n - p, k - p)
        rhs = 2 * sum(f(m, n - i, k - i + 1) for i in range(1, p + 1))
        if lhs != rhs:
            return ((m, n, k, p), lhs, rhs)
    return None


def _check_zeros_placement(f, m, n, k):
    lhs = f(m, n, k)
    for p in range(n + 1):
        rhs = sum(math.comb(p, i) * f(m + i, n - p, k) for i in range(p + 1))
        if lhs != rhs:
            return ((m, n, k, p), lhs, rhs)
    return None


def _check_binomial_sum(f, m, n, k):
    lhs = f(m, n, k)
    rhs = sum(math.comb(n, i) * binomial(m + i, k) for i in range(n + 1))
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_convolution(f, m, n, k):
    lhs = f(m, n, k)
    rhs = sum(
        math.comb(n, i) * math.comb(i, j) * binomial(m, k - i + j)
        for i in range(n + 1)
        for j in range(i + 1)
    )
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_shifted_window(f, m, n, k):
    if m + k < n:
        return None
    lhs = f(m + k - n, n, k)
    rhs = sum(binomial(n, m - i) * math.comb(k + i, k) for i in range(m + 1))
    return None if lhs == rhs else ((m, n, k), lhs, rhs)


def _check_parity_shift(f, m, n, k):
    ref = f(m, n, k)
    for p in range(1, min(n, k) + 1):
        shifted = f(m, n - p, k - p)
        if shifted % 2 != ref % 2:
            return ((m, n, k, p), shifted, ref)
    return None


def _check_first_row(f, m, n, k):
    if m != 0:
        return None
    lhs = f(0, n, k)
    rhs = (1 << (n - k)) * math.comb(n, k) if k <= n else 0
    return None if lhs == rhs else ((0, n, k), lhs, rhs)


_CHECKERS: dict[str, _Checker] = {
    "pascal": _check_pascal,
    "vertical": _check_vertical,
    "doubling": _check_doubling,
    "alternating_shift": _check_alternating_shift,
    "horizontal_full": _check_horizontal_full,
    "horizontal_tail": _check_horizontal_tail,
    "telescoping": _check_telescoping,
    "zeros_placement": _check_zeros_placement,
    "binomial_sum": _check_binomial_sum,
    "convolution": _check_convolution,
    "shifted_window": _check_shifted_window,
    "parity_shift": _check_parity_shift,
    "first_row": _check_first_row,
}

IDENTITY_NAMES: tuple[str, ...] = tuple(_CHECKERS)


def verify(
    identity: str,
    m_max: int,
    n_max: int,
    *,
    inset_fn: InsetFn | None = None,
) -> GridReport:
    """Check one identity over the grid; stop at the first counterexample.

    ``inset_fn`` substitutes the value source, which lets tests confirm the
    harness catches an injected fault.
    """
    checker = _CHECKERS.get(identity)
    if checker is None:
        raise ValueError(f"unknown identity: {identity!r}")
    if m_max < 0 or n_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    base = inset_fn if inset_fn is not None else inset

    def f(m: int, n: int, k: int) -> int:
        return 0 if k < 0 else base(m, n, k)

    for m in range(m_max + 1):
        for n in range(n_max + 1):
            for k in range(m + n + 3):
                bad = checker(f, m, n, k)
                if bad is not None:
                    return GridReport(identity, m_max, n_max, False, Counterexample(*bad))
    return GridReport(identity, m_max, n_max, True, None)


def verify_all(
    m_max: int, n_max: int, *, inset_fn: InsetFn | None = None
) -> list[GridReport]:
    """Run every identity, reported in declaration order."""
    return [verify(name, m_max, n_max, inset_fn=inset_fn) for name in IDENTITY_NAMES]
