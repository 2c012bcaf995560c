"""Exhaustive desk-scale verification: antichain enumeration, the search
for the maximum of |A| + |B| over cross-intersecting antichain pairs,
extremal/almost-extremal characterizations, and the closed-form sweeps
that need shadow machinery.

The pair search works on bit masks twice over: each subset of {1..n} is a
mask, and each family is in turn a mask over the 2^n subset indices.  A
family B cross-intersects A iff B's member mask is contained in A's
transversal mask (the subsets meeting every member of A), so the pair
test is a single integer operation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Sequence

from .cascade import _facets, kkt_shadow_bound, shade_of_last_bound
from .ground import Family, full_level
from .squashed import level_masks

MAX_ENUMERATION = 6
DEDEKIND = {1: 3, 2: 6, 3: 20, 4: 168, 5: 7581, 6: 7828354}


# ---------------------------------------------------------------------------
# antichain enumeration


def antichain_mask_tuples(universe: Sequence[int],
                          min_size: int = 0) -> Iterator[tuple[int, ...]]:
    """All antichains over the given candidate subsets, each exactly once,
    as tuples of masks in universe order (the empty antichain included
    when min_size == 0).  Branches that cannot reach min_size are pruned.
    """
    size = len(universe)
    comparable = []
    for i, s in enumerate(universe):
        row = 0
        for j, t in enumerate(universe):
            if not (s & ~t) or not (t & ~s):  # one contains the other (or equal)
                row |= 1 << j
        comparable.append(row)
    above = [(((1 << size) - 1) >> (i + 1)) << (i + 1) for i in range(size)]

    def walk(chosen: tuple[int, ...], allowed: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) >= min_size:
            yield chosen
        cand = allowed
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            nxt = allowed & ~comparable[i] & above[i]
            if len(chosen) + 1 + nxt.bit_count() >= min_size:
                yield from walk(chosen + (universe[i],), nxt)

    yield from walk((), (1 << size) - 1)


def enumerate_antichains(n: int, allow_long: bool = False) -> Iterator[Family]:
    """Every antichain of the power set of {1..n}, Dedekind-number many.

    n = 6 (7 828 354 antichains) must be requested explicitly; larger n
    is rejected outright.
    """
    if not 1 <= n <= MAX_ENUMERATION:
        raise ValueError(f"antichain enumeration supports 1 <= n <= {MAX_ENUMERATION}")
    if n == MAX_ENUMERATION and not allow_long:
        raise ValueError(
            f"n={MAX_ENUMERATION} enumerates {DEDEKIND[MAX_ENUMERATION]} antichains; "
            "pass allow_long=True to confirm")
    for masks in antichain_mask_tuples(range(1 << n)):
        yield Family.from_masks(n, masks)


def count_antichains_oracle(n: int) -> int:
    """Independent count via downsets: antichains biject with downsets
    (take maximal elements), and downsets over n elements are pairs
    (D0, D1) of downsets over n-1 elements with D1 contained in D0."""
    if not 1 <= n <= 6:
        raise ValueError("oracle supports 1 <= n <= 6")
    downsets = [0, 1]  # downsets of the 1-subset universe {empty set}
    for k in range(n - 1):
        width = 1 << (1 << k)
        downsets = [d0 | (d1 * width)
                    for d0 in downsets for d1 in downsets if not (d1 & ~d0)]
    return sum(1 for d0 in downsets for d1 in downsets if not (d1 & ~d0))


def middle_band_antichains(n: int, min_size: int) -> Iterator[tuple[int, ...]]:
    """Antichains with all members in ranks {n/2, n/2+1} and at least
    min_size members (even n).  Choosing the upper-level part U first
    leaves the lower level freely choosable outside the shadow of U."""
    if n % 2:
        raise ValueError("middle band enumeration needs even n")
    k = n // 2
    lo_level = level_masks(n, k)
    hi_level = level_masks(n, k + 1)
    lo_index = {m: i for i, m in enumerate(lo_level)}
    facet_bits = []
    for h in hi_level:
        bits = 0
        for fct in _facets(h):
            bits |= 1 << lo_index[fct]
        facet_bits.append(bits)
    for upper_bits in range(1 << len(hi_level)):
        upper = [hi_level[i] for i in range(len(hi_level)) if upper_bits >> i & 1]
        blocked = 0
        for i in range(len(hi_level)):
            if upper_bits >> i & 1:
                blocked |= facet_bits[i]
        pool = [lo_level[i] for i in range(len(lo_level)) if not (blocked >> i & 1)]
        need = max(min_size - len(upper), 0)
        if need > len(pool):
            continue
        for take in range(need, len(pool) + 1):
            for lower in combinations(pool, take):
                yield tuple(lower) + tuple(upper)


# ---------------------------------------------------------------------------
# canonical forms under the symmetric group


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    if n > MAX_ENUMERATION:
        raise ValueError(f"canonical forms supported for n <= {MAX_ENUMERATION}")
    tables = []
    for perm in permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] | (1 << perm[low.bit_length() - 1])
        tables.append(tuple(table))
    return tuple(tables)


def _encode(members: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(members, key=lambda m: (m.bit_count(), m)))


def canonical_family_key(f: Family) -> tuple[int, ...]:
    """Minimal member encoding over all ground-set permutations."""
    return min(_encode([t[m] for m in f.members]) for t in _perm_tables(f.n))


def canonical_pair_key(a: Family, b: Family) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimal joint encoding: the same permutation is applied to both
    sides, and the pair stays ordered (no A/B swap)."""
    if a.n != b.n:
        raise ValueError("pair members live over different ground sizes")
    return min((_encode([t[m] for m in a.members]),
                _encode([t[m] for m in b.members]))
               for t in _perm_tables(a.n))


def canonical_pair(a: Family, b: Family) -> tuple[Family, Family]:
    key_a, key_b = canonical_pair_key(a, b)
    return Family(a.n, key_a), Family(a.n, key_b)


# ---------------------------------------------------------------------------
# maximum |A| + |B| census


def max_sum_formula(n: int) -> int:
    """Closed-form optimum: 2*C(n, ceil(n/2)) for odd n,
    C(n, n/2) + C(n, n/2+1) for even n."""
    if n % 2:
        return 2 * comb(n, (n + 1) // 2)
    return comb(n, n // 2) + comb(n, n // 2 + 1)


@dataclass(frozen=True)
class SearchCensus:
    """Aggregate of one exhaustive pair search.

    raw_* lists hold ordered pairs (both orders of an asymmetric pair);
    the *_pairs lists are the distinct canonical forms, still ordered
    (permutation-minimal, no A/B swap).
    """

    n: int
    optimum: int
    optimum_pairs: tuple[tuple[Family, Family], ...]
    near_optimum_pairs: tuple[tuple[Family, Family], ...]
    ordered_count_optimum: int
    ordered_count_near: int
    unordered_count_optimum: int
    unordered_count_near: int
    raw_optimum: tuple[tuple[Family, Family], ...]
    raw_near: tuple[tuple[Family, Family], ...]
    reduction: str = "none"      # "middle_band" when the n=6 reduction ran
    incomplete: bool = False     # true when the wall-clock budget expired


def _meets_table(n: int) -> list[int]:
    """meets[x] = bitmask over all 2^n subset indices y with x & y != 0."""
    universe = 1 << n
    meets = [0] * universe
    for x in range(universe):
        row = 0
        for y in range(universe):
            if x & y:
                row |= 1 << y
        meets[x] = row
    return meets


def _family_bitmasks(cands: Sequence[tuple[int, ...]], n: int,
                     meets: list[int]) -> tuple[list[int], list[int]]:
    """Per candidate family: its member mask over subset indices, and the
    complement of its transversal mask.  B crosses A iff
    member_mask(B) & avoid(A) == 0."""
    full = (1 << (1 << n)) - 1
    mmask, avoid = [], []
    for c in cands:
        mm, tm = 0, full
        for m in c:
            mm |= 1 << m
            tm &= meets[m]
        mmask.append(mm)
        avoid.append(full ^ tm)
    return mmask, avoid


def _census_scan(cands: list[tuple[int, ...]], n: int,
                 deadline: float | None,
                 seed_best: int = 0) -> tuple[int, dict[int, list], bool]:
    """Two-phase scan over candidate antichains (mask tuples).

    Phase 1 finds the optimum with size-sorted pruning; phase 2 recollects
    every unordered pair at optimum and optimum-1 against the then-fixed
    threshold, so the result is independent of scan order.
    """
    meets = _meets_table(n)
    order = sorted(range(len(cands)), key=lambda i: (-len(cands[i]), cands[i]))
    sizes = [len(cands[i]) for i in order]
    mmask, avoid = _family_bitmasks([cands[i] for i in order], n, meets)

    def out_of_time() -> bool:
        return deadline is not None and time.monotonic() > deadline

    incomplete = False
    best = seed_best
    for ii in range(len(order)):
        if 2 * sizes[ii] <= best:
            break
        if out_of_time():
            incomplete = True
            break
        for jj in range(ii, len(order)):
            if sizes[ii] + sizes[jj] <= best:
                break
            if not (mmask[jj] & avoid[ii]):
                best = sizes[ii] + sizes[jj]

    buckets: dict[int, list] = {best: [], best - 1: []}
    threshold = best - 1
    for ii in range(len(order)):
        if 2 * sizes[ii] < threshold:
            break
        if incomplete or out_of_time():
            incomplete = True
            break
        for jj in range(ii, len(order)):
            s = sizes[ii] + sizes[jj]
            if s < threshold:
                break
            if not (mmask[jj] & avoid[ii]):
                buckets[s].append((cands[order[ii]], cands[order[jj]]))
    return best, buckets, incomplete


def max_cross_sum(n: int, allow_long: bool = False,
                  budget_seconds: float | None = None) -> SearchCensus:
    """Exhaustive maximum of |A| + |B| over cross-intersecting antichain
    pairs, with every pair at the optimum and at optimum-1.

    n <= 5 scans all antichain pairs; n = 6 searches only the middle band
    (ranks 3 and 4), which is justified for the bound by normalization
    but makes the uniqueness/near-optimal results band-relative.
    """
    deadline = None
    if budget_seconds is not None:
        deadline = time.monotonic() + budget_seconds
    if n <= 5:
        cands = list(antichain_mask_tuples(range(1 << n)))
        reduction = "none"
        seed_best = 0
    elif n == 6:
        lo, hi = full_level(n, n // 2), full_level(n, n // 2 + 1)
        # (lo, hi) is cross-intersecting, so its sum is a sound seed and
        # only band antichains within 1 of it can matter for the buckets
        assert all(x & y for x in lo.members for y in hi.members)
        seed_best = len(lo) + len(hi)
        floor_size = seed_best - 1 - comb(n, n // 2)
        cands = list(middle_band_antichains(n, floor_size))
        reduction = "middle_band"
    else:
        raise ValueError("census supports n <= 6 (middle band reduction at 6)")

    best, buckets, incomplete = _census_scan(cands, n, deadline, seed_best)

    def materialize(pairs: list) -> tuple[tuple[Family, Family], ...]:
        ordered = []
        for a_masks, b_masks in pairs:
            fa = Family.from_masks(n, a_masks)
            fb = Family.from_masks(n, b_masks)
            ordered.append((fa, fb))
            if fa != fb:
                ordered.append((fb, fa))
        ordered.sort(key=lambda p: (p[0].members, p[1].members))
        return tuple(ordered)

    raw_opt = materialize(buckets.get(best, []))
    raw_near = materialize(buckets.get(best - 1, []))

    def reduce(pairs) -> tuple[tuple[Family, Family], ...]:
        keys = sorted({canonical_pair_key(a, b) for a, b in pairs})
        return tuple((Family(n, ka), Family(n, kb)) for ka, kb in keys)

    return SearchCensus(
        n=n,
        optimum=best,
        optimum_pairs=reduce(raw_opt),
        near_optimum_pairs=reduce(raw_near),
        ordered_count_optimum=len(raw_opt),
        ordered_count_near=len(raw_near),
        unordered_count_optimum=len(buckets.get(best, [])),
        unordered_count_near=len(buckets.get(best - 1, [])),
        raw_optimum=raw_opt,
        raw_near=raw_near,
        reduction=reduction,
        incomplete=incomplete,
    )


# ---------------------------------------------------------------------------
# extremal / almost-extremal characterizations


def expected_optimal_pairs(n: int) -> tuple[tuple[Family, Family], ...]:
    """The ordered optimal pairs the closed-form characterization names."""
    if n % 2:
        lv = full_level(n, (n + 1) // 2)
        return ((lv, lv),)
    lo, hi = full_level(n, n // 2), full_level(n, n // 2 + 1)
    return ((lo, hi), (hi, lo))


def expected_near_optimal_pairs(n: int) -> tuple[tuple[Family, Family], ...]:
    """The ordered optimum-1 pairs: delete a single set from one side of
    an optimal pair (odd: from one copy of the middle level; even: from
    either level of the (lo, hi) pair), in both orders."""
    pairs = []
    if n % 2:
        lv = full_level(n, (n + 1) // 2)
        for x in lv.members:
            rest = Family.from_masks(n, (m for m in lv.members if m != x))
            pairs.append((lv, rest))
            pairs.append((rest, lv))
    else:
        lo, hi = full_level(n, n // 2), full_level(n, n // 2 + 1)
        for y in hi.members:
            rest = Family.from_masks(n, (m for m in hi.members if m != y))
            pairs.append((lo, rest))
            pairs.append((rest, lo))
        for x in lo.members:
            rest = Family.from_masks(n, (m for m in lo.members if m != x))
            pairs.append((rest, hi))
            pairs.append((hi, rest))
    return tuple(sorted(pairs, key=lambda p: (p[0].members, p[1].members)))


def extremal_report(n: int, budget_seconds: float | None = None) -> dict:
    """Bound + uniqueness of the optimum, by exhaustion (census vs the
    closed form and the expected canonical optimal pairs)."""
    census = max_cross_sum(n, budget_seconds=budget_seconds)
    formula = max_sum_formula(n)
    expected = sorted(canonical_pair_key(a, b) for a, b in expected_optimal_pairs(n))
    found = sorted(canonical_pair_key(a, b) for a, b in census.optimum_pairs)
    match = (not census.incomplete and census.optimum == formula
             and found == expected)
    return {"census": census, "formula_value": formula, "match": match}


def near_extremal_report(n: int, budget_seconds: float | None = None) -> dict:
    """Bidirectional check of the optimum-1 characterization: the census
    pair list and the predicted pair list must coincide exactly."""
    census = max_cross_sum(n, budget_seconds=budget_seconds)
    expected = expected_near_optimal_pairs(n)
    found = census.raw_near
    match = (not census.incomplete
             and census.optimum == max_sum_formula(n)
             and set(expected) == set(found))
    return {
        "census": census,
        "expected_ordered": len(expected),
        "found_ordered": len(found),
        "missing": tuple(sorted(set(expected) - set(found),
                                key=lambda p: (p[0].members, p[1].members))),
        "unexpected": tuple(sorted(set(found) - set(expected),
                                   key=lambda p: (p[0].members, p[1].members))),
        "match": match,
    }


def size4_antichain_classes_report() -> dict:
    """Scan all antichains of {1..4} containing a 1-set or a 3-set: none
    exceeds size 4, and exactly four isomorphism classes attain 4."""
    n = 4
    expected = {
        canonical_family_key(full_level(n, 1)),
        canonical_family_key(full_level(n, 3)),
        canonical_family_key(Family.from_sets(n, [(1,), (2, 3), (2, 4), (3, 4)])),
        canonical_family_key(Family.from_sets(n, [(1, 2), (1, 3), (1, 4), (2, 3, 4)])),
    }
    scanned = 0
    eligible = 0
    oversize = []
    found_classes = set()
    for fam in enumerate_antichains(n):
        scanned += 1
        ranks = set(fam.by_rank)
        if not (1 in ranks or 3 in ranks):
            continue
        eligible += 1
        if len(fam) > 4:
            oversize.append(fam)
        elif len(fam) == 4:
            found_classes.add(canonical_family_key(fam))
    return {
        "scanned": scanned,
        "eligible": eligible,
        "oversize": tuple(oversize),
        "found_classes": tuple(sorted(found_classes)),
        "expected_classes": tuple(sorted(expected)),
        "match": not oversize and found_classes == expected,
    }


# ---------------------------------------------------------------------------
# closed-form sweeps that need shadow machinery


@dataclass(frozen=True)
class SweepReport:
    name: str
    instances: int
    violations: tuple[tuple, ...]
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations


def sweep_shadow_excess(n_max: int = 13, brute_max: int = 9) -> SweepReport:
    """Odd n, level k = ceil(n/2)+1: the shadow of the first m k-sets has
    at least m+2 members, for every m up to C(n,k).  Closed form for all
    n <= n_max, cross-checked against brute force for n <= brute_max."""
    if not 3 <= n_max <= 13:
        raise ValueError("supported n_max range is 3..13 (odd levels only)")
    instances = 0
    bad = []
    for n in range(3, n_max + 1, 2):
        k = (n + 1) // 2 + 1
        brute_sizes = None
        if n <= brute_max:
            brute_sizes = [0]
            running: set[int] = set()
            for mask in level_masks(n, k):
                running |= set(_facets(mask))
                brute_sizes.append(len(running))
        for m in range(1, comb(n, k) + 1):
            instances += 1
            bound = kkt_shadow_bound(m, k)
            if bound < m + 2:
                bad.append((n, m, bound))
            if brute_sizes is not None and brute_sizes[m] != bound:
                bad.append((n, m, "brute-force mismatch", brute_sizes[m], bound))
    return SweepReport("shadow-excess", instances, tuple(bad))


_PAIR_SWEEP_STATE: dict[int, tuple] = {}


def _pair_sweep_setup(n: int) -> tuple:
    state = _PAIR_SWEEP_STATE.get(n)
    if state is None:
        cands = list(antichain_mask_tuples(range(1 << n)))
        fams = [Family.from_masks(n, c) for c in cands]
        mmask, avoid = _family_bitmasks([f.members for f in fams], n,
                                        _meets_table(n))
        member_sets = [frozenset(f.members) for f in fams]
        state = (fams, mmask, avoid, member_sets)
        _PAIR_SWEEP_STATE[n] = state
    return state


def _pair_sweep_stripe(args: tuple[int, int, int]) -> tuple:
    """One stripe (i = stripe, stripe+nstripes, ...) of the all-pairs
    normalization sweep; results merge associatively across stripes."""
    from .normalize import SelectionError, normalize_pair, middle_band
    from .ground import is_antichain, is_cross_intersecting

    n, stripe, nstripes = args
    fams, mmask, avoid, member_sets = _pair_sweep_setup(n)
    lo, hi = middle_band(n)
    full_mask = (1 << n) - 1
    crossing = moved = 0
    failures: list[tuple] = []
    violations: list[tuple] = []
    for i in range(stripe, len(fams), nstripes):
        av = avoid[i]
        fi = fams[i]
        members_i = fi.members
        for j in range(i, len(fams)):
            if mmask[j] & av:
                continue
            crossing += 1
            fj = fams[j]
            # complement exclusion: a crossing pair never contains a
            # member together with its complement on the other side
            other = member_sets[j]
            if any(full_mask ^ x in other for x in members_i):
                violations.append(("complement", fi.sets(), fj.sets()))
            try:
                ta, tb = normalize_pair(fi, fj, validate=False)
            except SelectionError as exc:
                failures.append((fi.sets(), fj.sets(), str(exc)))
                continue
            if not (ta.steps or tb.steps):
                # zero-step traces return the inputs themselves; nothing
                # can have been lost, so only confirm nothing changed
                if ta.final == fi and tb.final == fj:
                    continue
                violations.append(("identity", fi.sets(), fj.sets()))
                continue
            moved += 1
            fa, fb = ta.final, tb.final
            ok = (len(fa) == len(fi) and len(fb) == len(fj)
                  and is_antichain(fa) and is_antichain(fb)
                  and is_cross_intersecting(fa, fb)
                  and all(lo <= m.bit_count() <= hi for m in fa.members)
                  and all(lo <= m.bit_count() <= hi for m in fb.members))
            if not ok:
                violations.append(("preservation", fi.sets(), fj.sets()))
    return crossing, moved, failures, violations


@dataclass(frozen=True)
class PairSweepReport:
    """All-pairs normalization audit: every cross-intersecting antichain
    pair either normalizes into the middle band preserving sizes, the
    antichain property and cross-intersection, or fails selection loudly."""

    n: int
    antichains: int
    crossing_pairs: int
    moved_pairs: int
    selection_failures: tuple[tuple, ...]
    violations: tuple[tuple, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def normalization_pair_sweep(n: int, workers: int = 1) -> PairSweepReport:
    """Run normalize_pair over every unordered cross-intersecting pair of
    antichains of {1..n} (n <= 5) and audit the preserved properties.

    Work is striped over i-indices; merging is order-independent, so the
    report is identical at any worker count.
    """
    if not 1 <= n <= 5:
        raise ValueError("the exhaustive pair sweep supports 1 <= n <= 5")
    fams = _pair_sweep_setup(n)[0]  # built pre-fork so workers inherit it
    nstripes = max(workers, 1)
    tasks = [(n, s, nstripes) for s in range(nstripes)]
    if nstripes == 1:
        results = [_pair_sweep_stripe(tasks[0])]
    else:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=nstripes) as pool:
            results = list(pool.map(_pair_sweep_stripe, tasks))
    crossing = sum(r[0] for r in results)
    moved = sum(r[1] for r in results)
    failures = sorted(f for r in results for f in r[2])
    violations = sorted(v for r in results for v in r[3])
    return PairSweepReport(n, len(fams), crossing, moved,
                           tuple(failures), tuple(violations))


def sweep_last_shade_margin(n_max: int = 12) -> SweepReport:
    """Even n >= 6, level k = n/2: |shade of the last m k-sets| strictly
    exceeds n/(n+2)*m + 1 for every 1 <= m < C(n,k) - 1.  Comparisons are
    integer cross-multiplied; also confirms that the lone documented
    exception n=4, m=3 is an exact tie."""
    if not 6 <= n_max <= 12:
        raise ValueError("supported n_max range is 6..12")
    instances = 0
    bad = []
    notes = []
    for n in range(6, n_max + 1, 2):
        k = n // 2
        for m in range(1, comb(n, k) - 1):
            instances += 1
            size = shade_of_last_bound(m, n, k)
            # size > n/(n+2)*m + 1  <=>  (size-1)*(n+2) > n*m
            if not (size - 1) * (n + 2) > n * m:
                bad.append((n, m, size))
    tie = shade_of_last_bound(3, 4, 2)
    if (tie - 1) * 6 == 4 * 3:
        notes.append("n=4, m=3 is an exact tie (|shade|=3 equals the bound)")
    else:
        bad.append((4, 3, tie, "expected an exact tie"))
    return SweepReport("last-shade-margin", instances, tuple(bad), tuple(notes))
