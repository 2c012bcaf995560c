"""Squashed (colex) order on k-sets: comparison, rank/unrank, segments.

On equal-size sets the squashed order "largest element of the symmetric
difference decides" coincides with colex order of the element lists,
which in the bit-mask encoding is plain integer comparison.  The rank of
a k-set {c_1 < ... < c_k} within its level is sum_i C(c_i - 1, i) --
the combinatorial number system -- so rank/unrank run in O(k) without
enumerating the level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .ground import Family, check_ground, full_level

LT, EQ, GT = -1, 0, 1


def squash_compare(a: int, b: int) -> int:
    """-1, 0 or 1 as a precedes, equals or follows b in squashed order.

    Defined on sets of equal cardinality only.
    """
    if a.bit_count() != b.bit_count():
        raise ValueError("squashed order compares sets of equal cardinality")
    if a == b:
        return EQ
    return LT if a < b else GT


@dataclass(frozen=True)
class SquashRank:
    """Position of a k-set inside the squashed order of its level."""

    k: int
    index: int


def rank(x: int) -> SquashRank:
    """Number of equal-size sets strictly preceding x in squashed order."""
    idx = 0
    i = 0
    m = x
    while m:
        low = m & -m
        i += 1
        idx += comb(low.bit_length() - 1, i)
        m ^= low
    return SquashRank(x.bit_count(), idx)


def unrank(n: int, k: int, index: int) -> int:
    """The k-subset of {1..n} at the given squashed-order position."""
    check_ground(n)
    if not 0 <= k <= n:
        raise ValueError(f"level {k} out of range for n={n}")
    if not 0 <= index < comb(n, k):
        raise ValueError(f"index {index} out of range for C({n},{k})={comb(n, k)}")
    mask = 0
    rem = index
    for i in range(k, 0, -1):
        a = i - 1  # C(i-1, i) = 0 <= rem
        while comb(a + 1, i) <= rem:
            a += 1
        rem -= comb(a, i)
        mask |= 1 << a  # element a+1
    assert rem == 0 and mask.bit_count() == k
    return mask


@lru_cache(maxsize=None)
def level_masks(n: int, k: int) -> tuple[int, ...]:
    """The whole level, squashed order; cached (errors for n > 20)."""
    return full_level(n, k).members


def _slice(n: int, k: int, start: int, stop: int) -> Family:
    lv = level_masks(n, k)
    if not 0 <= start <= stop <= len(lv):
        raise ValueError(
            f"window [{start},{stop}) out of range for C({n},{k})={len(lv)}")
    return Family(n, lv[start:stop])


def first_segment(n: int, k: int, m: int) -> Family:
    """The first m k-subsets of {1..n} in squashed order."""
    return _slice(n, k, 0, m)


def last_segment(n: int, k: int, m: int) -> Family:
    """The last m k-subsets of {1..n} in squashed order."""
    size = len(level_masks(n, k))
    return _slice(n, k, size - m, size)


def segment(n: int, k: int, start: int, m: int) -> Family:
    """m consecutive k-subsets starting at squashed-order position start."""
    return _slice(n, k, start, start + m)
