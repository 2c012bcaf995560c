"""Push a family's members into the middle band of the Boolean lattice
while preserving its size, the antichain property, and cross-intersection
with a partner family.

One "up" step removes every member of the minimum rank i and replaces it
with an equal number of (i+1)-sets drawn from the shade of the removed
members; "down" steps are the mirror image via shadows.  Candidates are
filtered to those independent of every retained member and still meeting
every partner member, then taken greedily in squashed order, which makes
traces deterministic.  If the filtered pool is too small the step fails
loudly (SelectionError) instead of backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ground import Family, independent, is_antichain, is_cross_intersecting


@dataclass(frozen=True)
class Step:
    direction: str               # "up" | "down"
    rank: int                    # rank whose members were replaced
    removed: tuple[int, ...]
    inserted: tuple[int, ...]


@dataclass(frozen=True)
class NormalizationTrace:
    steps: tuple[Step, ...]
    final: Family


class SelectionError(RuntimeError):
    """Raised when a replacement step cannot find enough candidates."""

    def __init__(self, direction: str, rank: int, needed: int, found: int):
        self.direction = direction
        self.rank = rank
        self.needed = needed
        self.found = found
        super().__init__(
            f"selection failure pushing {direction} from rank {rank}: "
            f"needed {needed} replacement sets, only {found} pass the filter")


def middle_band(n: int, mode: str | None = None) -> tuple[int, int]:
    """Target rank band (lo, hi) for the requested mode.

    even mode: [n/2, n/2 + 1]; odd mode: [ceil(n/2), ceil(n/2) + 1],
    capped at n.  The mode defaults to the parity of n and must match it.
    """
    if mode is None:
        mode = "even" if n % 2 == 0 else "odd"
    if mode not in ("even", "odd"):
        raise ValueError(f"mode must be 'even' or 'odd', got {mode!r}")
    if (mode == "even") != (n % 2 == 0):
        raise ValueError(f"mode {mode!r} does not match the parity of n={n}")
    lo = n // 2 if mode == "even" else (n + 1) // 2
    return lo, min(lo + 1, n)


def _validate(f: Family, partner: Family) -> None:
    if f.n != partner.n:
        raise ValueError("family and partner live over different ground sizes")
    if not is_antichain(f):
        raise ValueError("input family is not an antichain")
    if not is_cross_intersecting(f, partner):
        raise ValueError("family and partner are not cross-intersecting")


def _replace_extreme_rank(f: Family, partner: Family, old_rank: int,
                          direction: str) -> tuple[Step, Family]:
    """Swap every rank-old_rank member for a shade (up) or shadow (down)
    set, keeping the family size.  Candidates are scanned in squashed
    order and must be independent of every retained member and meet every
    partner member; too few survivors raises SelectionError."""
    n = f.n
    doomed = tuple(m for m in f.members if m.bit_count() == old_rank)
    retained = tuple(m for m in f.members if m.bit_count() != old_rank)
    pool: set[int] = set()
    if direction == "up":
        top = (1 << n) - 1
        for m in doomed:
            free = top ^ m
            while free:
                low = free & -free
                pool.add(m | low)
                free ^= low
    else:
        for m in doomed:
            rest = m
            while rest:
                low = rest & -rest
                pool.add(m ^ low)
                rest ^= low
    need = len(doomed)
    partner_members = partner.members
    chosen: list[int] = []
    for cand in sorted(pool):
        if any(not independent(cand, r) for r in retained):
            continue
        if any(not cand & y for y in partner_members):
            continue
        chosen.append(cand)
        if len(chosen) == need:
            step = Step(direction, old_rank, doomed, tuple(chosen))
            return step, Family(n, retained + tuple(chosen))
    raise SelectionError(direction, old_rank, need, len(chosen))


def push_up_min_rank(f: Family, partner: Family, mode: str | None = None,
                     validate: bool = True) -> NormalizationTrace:
    """One up step: if the minimum rank i sits below the band floor,
    replace all rank-i members with shade sets.  Identity trace otherwise.
    """
    lo, _ = middle_band(f.n, mode)
    if validate:
        _validate(f, partner)
    if not f.members or min(m.bit_count() for m in f.members) >= lo:
        return NormalizationTrace((), f)
    i = min(m.bit_count() for m in f.members)
    step, final = _replace_extreme_rank(f, partner, i, "up")
    return NormalizationTrace((step,), final)


def _check_partner_sizes(f: Family, partner: Family) -> None:
    small = sum(1 for y in partner.members if 2 * y.bit_count() < f.n)
    if small:
        raise ValueError(
            "push down needs every partner member to have size >= n/2; "
            f"{small} partner member(s) are smaller")


def push_down_max_rank(f: Family, partner: Family, mode: str | None = None,
                       validate: bool = True) -> NormalizationTrace:
    """One down step: if the maximum rank j sits above the band ceiling,
    replace all rank-j members with shadow sets.

    A real step additionally requires every partner member to have size
    >= n/2; that is what keeps cross-intersection automatic after the
    replacement (|new member| + |partner member| > n)."""
    _, hi = middle_band(f.n, mode)
    if validate:
        _validate(f, partner)
    if not f.members or max(m.bit_count() for m in f.members) <= hi:
        return NormalizationTrace((), f)
    _check_partner_sizes(f, partner)
    j = max(m.bit_count() for m in f.members)
    step, final = _replace_extreme_rank(f, partner, j, "down")
    return NormalizationTrace((step,), final)


def _raise_to_floor(f: Family, partner: Family, mode: str | None):
    lo, _ = middle_band(f.n, mode)
    steps: list[Step] = []
    fuel = f.n
    while f.members:
        i = min(m.bit_count() for m in f.members)
        if i >= lo:
            break
        step, f = _replace_extreme_rank(f, partner, i, "up")
        steps.append(step)
        fuel -= 1
        assert fuel >= 0, "up phase failed to terminate within n rounds"
    return steps, f


def _lower_to_ceiling(f: Family, partner: Family, mode: str | None):
    _, hi = middle_band(f.n, mode)
    steps: list[Step] = []
    fuel = f.n
    checked_partner = False
    while f.members:
        j = max(m.bit_count() for m in f.members)
        if j <= hi:
            break
        if not checked_partner:
            _check_partner_sizes(f, partner)
            checked_partner = True
        step, f = _replace_extreme_rank(f, partner, j, "down")
        steps.append(step)
        fuel -= 1
        assert fuel >= 0, "down phase failed to terminate within n rounds"
    return steps, f


def normalize_to_middle(f: Family, partner: Family, mode: str | None = None,
                        validate: bool = True) -> NormalizationTrace:
    """Repeated up steps, then repeated down steps, until every member of
    f sits inside the middle band.  The partner is left untouched; the
    down phase therefore requires all partner members to have size >= n/2
    already (see push_down_max_rank)."""
    if validate:
        _validate(f, partner)
        if not is_antichain(partner):
            raise ValueError("partner family is not an antichain")
    up_steps, f1 = _raise_to_floor(f, partner, mode)
    down_steps, f2 = _lower_to_ceiling(f1, partner, mode)
    return NormalizationTrace(tuple(up_steps + down_steps), f2)


def normalize_pair(a: Family, b: Family, mode: str | None = None,
                   validate: bool = True
                   ) -> tuple[NormalizationTrace, NormalizationTrace]:
    """Normalize both families of a cross-intersecting antichain pair.

    Stage order matters: both families are raised to the band floor first
    (each against the other's current state), so that by the time the
    down phases run every partner member already has size >= n/2."""
    if validate:
        _validate(a, b)
        if not is_antichain(b):
            raise ValueError("partner family is not an antichain")
    a_up, a1 = _raise_to_floor(a, b, mode)
    b_up, b1 = _raise_to_floor(b, a1, mode)
    a_down, a2 = _lower_to_ceiling(a1, b1, mode)
    b_down, b2 = _lower_to_ceiling(b1, a2, mode)
    return (NormalizationTrace(tuple(a_up + a_down), a2),
            NormalizationTrace(tuple(b_up + b_down), b2))
