"""Shadows, shades, their "new" variants, and the closed-form counting
machinery: cascade (k-binomial) representations, the Kruskal-Katona
shadow bound, its shade dual, and the local counting bounds.

Shadows and shades are always computed by brute-force union over the
members; the closed forms never feed back into them, so the two routes
stay independently checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .ground import Family, check_ground
from .squashed import last_segment, level_masks, rank

MAX_REPRESENTABLE = comb(60, 30)


# ---------------------------------------------------------------------------
# brute-force shadow / shade


def _uniform_rank(f: Family) -> int:
    ks = set(f.by_rank)
    if len(ks) != 1:
        raise ValueError("operation needs a uniform-rank family")
    return next(iter(ks))


def _facets(mask: int):
    m = mask
    while m:
        low = m & -m
        yield mask ^ low
        m ^= low


def _covers(mask: int, n: int):
    free = ((1 << n) - 1) ^ mask
    while free:
        low = free & -free
        yield mask | low
        free ^= low


def shadow(f: Family) -> Family:
    """All (k-1)-sets contained in some member of a k-uniform family."""
    if not f.members:
        return Family(f.n, ())
    k = _uniform_rank(f)
    if k == 0:
        raise ValueError("shadow undefined at rank 0")
    return Family.from_masks(f.n, (x for m in f.members for x in _facets(m)))


def shade(f: Family) -> Family:
    """All (k+1)-sets containing some member of a k-uniform family."""
    if not f.members:
        return Family(f.n, ())
    k = _uniform_rank(f)
    if k == f.n:
        raise ValueError(f"shade undefined at rank n={f.n}")
    return Family.from_masks(f.n, (x for m in f.members for x in _covers(m, f.n)))


@lru_cache(maxsize=None)
def _level_new_shadow(n: int, k: int) -> tuple[frozenset[int], ...]:
    """Per squashed-order position: facets not below any earlier k-set."""
    seen: set[int] = set()
    out = []
    for m in level_masks(n, k):
        facets = frozenset(_facets(m))
        out.append(facets - seen)
        seen |= facets
    # fresh contributions partition the (k-1)-level
    assert sum(len(fs) for fs in out) == len(seen) == comb(n, k - 1)
    return tuple(out)


@lru_cache(maxsize=None)
def _level_new_shade(n: int, k: int) -> tuple[frozenset[int], ...]:
    """Per squashed-order position: covers not above any later k-set."""
    lv = level_masks(n, k)
    seen: set[int] = set()
    out: list[frozenset[int]] = [frozenset()] * len(lv)
    for i in reversed(range(len(lv))):
        covers = frozenset(_covers(lv[i], n))
        out[i] = covers - seen
        seen |= covers
    assert sum(len(fs) for fs in out) == len(seen) == comb(n, k + 1)
    return tuple(out)


def new_shadow(f: Family) -> Family:
    """Union over members S of the facets of S not in the shadow of any
    k-set preceding S in squashed order (predecessors range over the
    whole level, not just the family)."""
    if not f.members:
        return Family(f.n, ())
    k = _uniform_rank(f)
    if k == 0:
        raise ValueError("new-shadow undefined at rank 0")
    fresh = _level_new_shadow(f.n, k)
    out: set[int] = set()
    for m in f.members:
        out |= fresh[rank(m).index]
    return Family.from_masks(f.n, out)


def new_shade(f: Family) -> Family:
    """Dual of new_shadow: covers not above any later k-set."""
    if not f.members:
        return Family(f.n, ())
    k = _uniform_rank(f)
    if k == f.n:
        raise ValueError(f"new-shade undefined at rank n={f.n}")
    fresh = _level_new_shade(f.n, k)
    out: set[int] = set()
    for m in f.members:
        out |= fresh[rank(m).index]
    return Family.from_masks(f.n, out)


# ---------------------------------------------------------------------------
# cascade representation and closed-form bounds


@dataclass(frozen=True)
class CascadeRep:
    """The k-binomial representation m = C(a_k,k) + ... + C(a_t,t) with
    a_k > a_{k-1} > ... > a_t >= t >= 1 (terms with zero remainder are
    omitted, so every listed term is positive)."""

    k: int
    terms: tuple[tuple[int, int], ...]  # (a_i, i), i strictly descending

    def value(self) -> int:
        return sum(comb(a, i) for a, i in self.terms)

    def shifted_sum(self, shift: int) -> int:
        """Sum of C(a_i, i + shift) over the terms."""
        return sum(comb(a, i + shift) for a, i in self.terms)

    def __str__(self) -> str:
        return "+".join(f"C({a},{i})" for a, i in self.terms)


def _max_binom_arg(rem: int, i: int) -> int:
    """Largest a with C(a, i) <= rem (rem >= 1)."""
    if i == 1:
        return rem
    lo, hi = i, i + 1  # C(i,i) = 1 <= rem
    while comb(hi, i) <= rem:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, i) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


def cascade(m: int, k: int) -> CascadeRep:
    """Greedy k-binomial representation of m.

    Greedy means a_k = max{a : C(a,k) <= m}, then recurse on the
    remainder at k-1; this is the unique representation satisfying the
    strictly-decreasing side condition.
    """
    if k < 1:
        raise ValueError(f"cascade representation needs k >= 1, got {k}")
    if m < 1:
        raise ValueError(f"cascade representation needs m >= 1, got {m}")
    if m > MAX_REPRESENTABLE:
        raise ValueError(f"m exceeds the supported cap C(60,30)={MAX_REPRESENTABLE}")
    terms: list[tuple[int, int]] = []
    rem, i = m, k
    while rem > 0:
        assert i >= 1  # C(a,1)=a always absorbs the remainder by i=1
        a = _max_binom_arg(rem, i)
        assert not terms or a < terms[-1][0]
        terms.append((a, i))
        rem -= comb(a, i)
        i -= 1
    return CascadeRep(k, tuple(terms))


def kkt_shadow_bound(m: int, k: int) -> int:
    """C(a_k,k-1) + ... + C(a_t,t-1): the minimum shadow size of m k-sets,
    attained exactly by the first m k-sets in squashed order."""
    return cascade(m, k).shifted_sum(-1)


def shade_of_last_bound(m: int, n: int, k: int) -> int:
    """|shade of the last m k-sets of {1..n}|, via the complement duality
    |shade L_{n,k}(m)| = |shadow F_{n,n-k}(m)|."""
    check_ground(n)
    if not 0 <= k < n:
        raise ValueError(f"shade level {k} out of range for n={n}")
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"m={m} out of range for C({n},{k})={comb(n, k)}")
    if m == 0:
        return 0
    return kkt_shadow_bound(m, n - k)


def local_shade_bound(m: int, n: int, k: int) -> Fraction:
    """(n-k)/(k+1) * m: counting lower bound for the shade of m k-sets."""
    check_ground(n)
    if not 0 <= k < n:
        raise ValueError(f"shade level {k} out of range for n={n}")
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"m={m} out of range for C({n},{k})={comb(n, k)}")
    return Fraction((n - k) * m, k + 1)


def local_shadow_bound(m: int, n: int, k: int) -> Fraction:
    """k/(n-k+1) * m: counting lower bound for the shadow of m k-sets."""
    check_ground(n)
    if not 0 < k <= n:
        raise ValueError(f"shadow level {k} out of range for n={n}")
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"m={m} out of range for C({n},{k})={comb(n, k)}")
    return Fraction(k * m, n - k + 1)


# ---------------------------------------------------------------------------
# last-segment shade table (middle level of an even ground)


@dataclass(frozen=True)
class ShadeTableRow:
    m: int
    last_set: int                 # the m-th k-set from the end
    new_shade: tuple[int, ...]    # its fresh contribution to the shade
    shade_size: int               # |shade of the last m k-sets|, brute force
    bound: Fraction               # n/(n+2) * m + 1


def shade_table(n: int = 4) -> list[ShadeTableRow]:
    """Row-by-row profile of the last-segment shade at level n/2."""
    check_ground(n)
    if n % 2:
        raise ValueError(f"shade table needs an even ground size, got {n}")
    k = n // 2
    lv = level_masks(n, k)
    fresh = _level_new_shade(n, k)
    rows = []
    for m in range(1, len(lv) + 1):
        pos = len(lv) - m
        rows.append(ShadeTableRow(
            m=m,
            last_set=lv[pos],
            new_shade=tuple(sorted(fresh[pos])),
            shade_size=len(shade(last_segment(n, k, m))),
            bound=Fraction(n * m, n + 2) + 1,
        ))
    return rows


# ---------------------------------------------------------------------------
# exhaustive cross-checks of the closed forms


def kkt_oracle_mismatches(n_max: int = 10) -> list[tuple]:
    """Compare closed forms against brute force for every n <= n_max, k, m:
    kkt_shadow_bound vs |shadow of first segments|, shade_of_last_bound vs
    |shade of last segments|, and the shadow/shade duality across co-levels.
    Returns the list of mismatching (n, k, m, what) tuples."""
    bad: list[tuple] = []
    for n in range(1, n_max + 1):
        shadow_sizes: dict[int, list[int]] = {}
        shade_sizes: dict[int, list[int]] = {}
        for k in range(0, n + 1):
            lv = level_masks(n, k)
            if k >= 1:
                running: set[int] = set()
                sizes = [0]
                for mask in lv:
                    running |= set(_facets(mask))
                    sizes.append(len(running))
                shadow_sizes[k] = sizes
                for m in range(1, len(lv) + 1):
                    if kkt_shadow_bound(m, k) != sizes[m]:
                        bad.append((n, k, m, "shadow-closed-form"))
            if k <= n - 1:
                running = set()
                sizes = [0] * (len(lv) + 1)
                for m, mask in enumerate(reversed(lv), 1):
                    running |= set(_covers(mask, n))
                    sizes[m] = len(running)
                shade_sizes[k] = sizes
                for m in range(1, len(lv) + 1):
                    if shade_of_last_bound(m, n, k) != sizes[m]:
                        bad.append((n, k, m, "shade-closed-form"))
        for k, sizes in shadow_sizes.items():
            dual = shade_sizes.get(n - k)
            if dual is None:
                continue
            for m in range(len(sizes)):
                if sizes[m] != dual[m]:
                    bad.append((n, k, m, "duality"))
    return bad


@dataclass(frozen=True)
class WindowReport:
    """Result of the consecutive-window minimality sweep: among all windows
    of m consecutive k-sets, the last window minimizes the new-shadow size
    and the first window minimizes the new-shade size."""

    n_max: int
    windows_checked: int
    violations: tuple[tuple, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def window_minimality_report(n_max: int = 8) -> WindowReport:
    checked = 0
    bad: list[tuple] = []
    for n in range(1, n_max + 1):
        for k in range(0, n + 1):
            lv = level_masks(n, k)
            size = len(lv)
            for what, fresh_of in (("new-shadow", _level_new_shadow),
                                   ("new-shade", _level_new_shade)):
                if what == "new-shadow" and k == 0:
                    continue
                if what == "new-shade" and k == n:
                    continue
                sizes = [len(fs) for fs in fresh_of(n, k)]
                prefix = [0]
                for s in sizes:
                    prefix.append(prefix[-1] + s)
                # fresh contributions are disjoint across positions, so a
                # window's new-shadow/new-shade size is a prefix-sum difference
                for m in range(1, size + 1):
                    if what == "new-shadow":
                        floor_value = prefix[size] - prefix[size - m]  # last m
                    else:
                        floor_value = prefix[m]  # first m
                    for start in range(0, size - m + 1):
                        checked += 1
                        got = prefix[start + m] - prefix[start]
                        if got < floor_value:
                            bad.append((n, k, m, start, what, got, floor_value))
    return WindowReport(n_max, checked, tuple(bad))
