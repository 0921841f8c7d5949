"""Integer polynomials and truncated formal power series.

Polynomials are coefficient lists, index = degree, trailing zeros trimmed
(the zero polynomial is the empty list).  A truncated series of order N is
a list of N + 1 exact integer coefficients, arithmetic modulo x^(N+1).

Division keeps everything in integers because every denominator used here
has constant term +-1.  Each generating-function builder states which
coefficients carry inset values; coefficients outside that range are
produced but unconstrained.
"""

from __future__ import annotations

from .errors import NonUnitConstantTermError

__all__ = [
    "DEFAULT_ORDER",
    "gf_in_k",
    "gf_in_m",
    "gf_in_n",
    "poly_mul",
    "poly_pow",
    "poly_trim",
    "series_div",
]

DEFAULT_ORDER = 32


def poly_trim(coeffs: list[int]) -> list[int]:
    """Canonical form: strip trailing zero coefficients."""
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return list(coeffs[:end])


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_pow(base: list[int], e: int) -> list[int]:
    """Exact polynomial power; e = 0 gives the constant 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = [1]
    sq = poly_trim(base)
    while e:
        if e & 1:
            result = poly_mul(result, sq)
        e >>= 1
        if e:
            sq = poly_mul(sq, sq)
    return result


def series_div(num: list[int], den: list[int], order: int) -> list[int]:
    """Quotient q with num = den * q (mod x^(order+1)).

    Requires den to have constant term +1 or -1 so the quotient stays
    integral.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not den or den[0] not in (1, -1):
        raise NonUnitConstantTermError(
            "series division requires a denominator with constant term +1 or -1"
        )
    lead = den[0]
    out = [0] * (order + 1)
    for i in range(order + 1):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out[i] = acc * lead  # divide by +-1
    return out


def gf_in_m(n: int, k: int, order: int = DEFAULT_ORDER) -> list[int]:
    """Expansion of (1+x)^n / (1-x)^(k+1).

    The coefficient of x^m equals inset(m+k-n, n, k) for every
    m >= max(0, n-k); below that threshold coefficients are unconstrained.
    """
    if n < 0 or k < 0:
        raise ValueError("parameters must be nonnegative")
    return series_div(poly_pow([1, 1], n), poly_pow([1, -1], k + 1), order)


def gf_in_n(m: int, k: int, order: int = DEFAULT_ORDER) -> list[int]:
    """Expansion of (1-x)^m / (1-2x)^(k+1).

    The coefficient of x^n equals inset(m, n+k-m, k) whenever n + k >= m.
    """
    if m < 0 or k < 0:
        raise ValueError("parameters must be nonnegative")
    return series_div(poly_pow([1, -1], m), poly_pow([1, -2], k + 1), order)


def gf_in_k(m: int, n: int, order: int = DEFAULT_ORDER) -> list[int]:
    """Expansion of (2-x)^n / (1-x)^(m+n+1).

    The coefficient of x^k equals inset(m+k, n, k) for every k.
    """
    if m < 0 or n < 0:
        raise ValueError("parameters must be nonnegative")
    return series_div(poly_pow([2, -1], n), poly_pow([1, -1], m + n + 1), order)
