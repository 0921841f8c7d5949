"""Enumeration of the restricted ternary words counted by inset numbers.

A word satisfies the constraint (m, n, k) when it has length m + n, exactly
k letters equal to 2, and no 0 among its first m letters.  Words are plain
digit strings such as ``"1022"`` so that leading zeros survive.

The enumerator builds only satisfying words (digit choices are pruned by
the remaining budget of 2s); the exhaustive filter over all 3^(m+n) raw
words survives as :func:`count_bruteforce`, the independent test oracle.
"""

from __future__ import annotations

import functools
import itertools

from .errors import CapExceededError

__all__ = ["count_bruteforce", "enumerate_words", "is_satisfying"]

ENUMERATION_CAP = 20
BRUTEFORCE_CAP = 14


def _check_constraint(m: int, n: int, k: int) -> None:
    if m < 0 or n < 0 or k < 0:
        raise ValueError(f"word constraint must be nonnegative, got ({m}, {n}, {k})")


def enumerate_words(m: int, n: int, k: int, cap: int = ENUMERATION_CAP) -> list[str]:
    """All satisfying words in lexicographic order (digit order 0 < 1 < 2).

    The list length equals inset(m, n, k).  Raises CapExceededError when
    m + n exceeds ``cap``.
    """
    _check_constraint(m, n, k)
    total = m + n
    if total > cap:
        raise CapExceededError(f"word length {total} exceeds enumeration cap {cap}")
    out: list[str] = []
    acc: list[str] = []

    def rec(pos: int, twos: int) -> None:
        if twos > k or k - twos > total - pos:
            return
        if pos == total:
            out.append("".join(acc))
            return
        for d in "12" if pos < m else "012":
            acc.append(d)
            rec(pos + 1, twos + (d == "2"))
            acc.pop()

    rec(0, 0)
    return out


@functools.lru_cache(maxsize=None)
def _counts_by_twos(m: int, n: int) -> tuple[int, ...]:
    # one pass over all 3^(m+n) raw words, bucketed by number of 2s
    counts = [0] * (m + n + 1)
    for w in itertools.product((0, 1, 2), repeat=m + n):
        if 0 not in w[:m]:
            counts[w.count(2)] += 1
    return tuple(counts)


def count_bruteforce(m: int, n: int, k: int, cap: int = BRUTEFORCE_CAP) -> int:
    """Count satisfying words by exhaustive filtering of all raw words.

    Test oracle only; per-(m, n) scans are cached so sweeping k is cheap.
    """
    _check_constraint(m, n, k)
    if m + n > cap:
        raise CapExceededError(f"word length {m + n} exceeds brute-force cap {cap}")
    counts = _counts_by_twos(m, n)
    return counts[k] if k <= m + n else 0


def is_satisfying(word: str, m: int, n: int, k: int) -> bool:
    """True iff ``word`` has length m+n, exactly k 2s, and a zero-free m-prefix."""
    _check_constraint(m, n, k)
    if len(word) != m + n or any(ch not in "012" for ch in word):
        return False
    return word.count("2") == k and "0" not in word[:m]
