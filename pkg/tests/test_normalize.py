import pytest
from hypothesis import given, settings, strategies as st

from sperner.ground import (Family, full_level, is_antichain,
                            is_cross_intersecting)
from sperner.normalize import (SelectionError,
                               _replace_extreme_rank, middle_band,
                               normalize_pair, normalize_to_middle,
                               push_down_max_rank, push_up_min_rank)


def fam(n, *sets):
    return Family.from_sets(n, sets)


EMPTY4 = Family(4, ())


class TestMiddleBand:
    def test_bands(self):
        assert middle_band(4) == (2, 3)
        assert middle_band(6) == (3, 4)
        assert middle_band(3) == (2, 3)
        assert middle_band(5) == (3, 4)
        assert middle_band(1) == (1, 1)

    def test_mode_must_match_parity(self):
        assert middle_band(4, "even") == (2, 3)
        with pytest.raises(ValueError):
            middle_band(4, "odd")
        with pytest.raises(ValueError):
            middle_band(5, "even")
        with pytest.raises(ValueError):
            middle_band(4, "sideways")


class TestPushUp:
    def test_single_small_set(self):
        trace = push_up_min_rank(fam(4, (1,)), EMPTY4)
        assert trace.final == fam(4, (1, 2))  # first shade set in squashed order
        assert len(trace.steps) == 1
        assert trace.steps[0].direction == "up"
        assert trace.steps[0].rank == 1

    def test_already_at_floor(self):
        f = fam(4, (1, 2), (3, 4))
        trace = push_up_min_rank(f, EMPTY4)
        assert trace.final == f and trace.steps == ()

    def test_full_level_shift_odd(self):
        f = full_level(5, 2)
        trace = push_up_min_rank(f, Family(5, ()))
        assert trace.final == full_level(5, 3)
        assert len(trace.final) == len(f)

    def test_rejects_non_antichain(self):
        with pytest.raises(ValueError):
            push_up_min_rank(fam(4, (1,), (1, 2)), EMPTY4)

    def test_rejects_non_crossing_partner(self):
        with pytest.raises(ValueError):
            push_up_min_rank(fam(4, (1, 2)), fam(4, (3, 4)))


class TestPushDown:
    def test_single_big_set(self):
        trace = push_down_max_rank(fam(4, (1, 2, 3, 4)), EMPTY4)
        assert trace.final == fam(4, (1, 2, 3))  # first shadow set
        assert trace.steps[0].direction == "down"

    def test_already_at_ceiling(self):
        f = fam(4, (1, 2, 3))
        trace = push_down_max_rank(f, EMPTY4)
        assert trace.final == f and trace.steps == ()

    def test_size_preserving_subset_of_shadow(self):
        f = full_level(6, 5)
        trace = push_down_max_rank(f, Family(6, ()))
        assert len(trace.final) == 6
        assert set(trace.final.by_rank) == {4}
        # greedy takes the first 6 4-sets in squashed order
        from sperner.squashed import first_segment
        assert trace.final == first_segment(6, 4, 6)

    def test_partner_below_half_rejected(self):
        f = fam(4, (1, 2, 3, 4))
        small_partner = fam(4, (1,))
        with pytest.raises(ValueError):
            push_down_max_rank(f, small_partner)

    def test_partner_size_only_checked_when_stepping(self):
        f = fam(4, (2, 3))  # already inside the band
        small_partner = fam(4, (2,))
        trace = push_down_max_rank(f, small_partner)
        assert trace.final == f


class TestNormalizeToMiddle:
    def test_identity_inside_band(self):
        f = fam(4, (1, 2), (1, 3, 4))
        trace = normalize_to_middle(f, EMPTY4)
        assert trace.final == f and trace.steps == ()

    def test_mixed_pair_example(self):
        f = fam(4, (1,), (2, 3, 4))
        trace = normalize_to_middle(f, EMPTY4)
        assert len(trace.final) == 2
        assert is_antichain(trace.final)
        assert set(trace.final.by_rank) <= {2, 3}

    def test_odd_small(self):
        trace = normalize_to_middle(fam(3, (1,)), Family(3, ()))
        assert len(trace.final) == 1
        assert set(trace.final.by_rank) == {2}

    def test_multi_round_up(self):
        trace = normalize_to_middle(fam(6, (1,)), Family(6, ()))
        assert set(trace.final.by_rank) == {3}
        assert [s.rank for s in trace.steps] == [1, 2]

    def test_empty_family(self):
        trace = normalize_to_middle(EMPTY4, EMPTY4)
        assert trace.final == EMPTY4 and trace.steps == ()

    def test_singleton_empty_set(self):
        trace = normalize_to_middle(Family(4, (0,)), EMPTY4)
        assert set(trace.final.by_rank) == {2}
        assert len(trace.final) == 1


class TestSelectionFailurePath:
    def test_selection_error_diagnostics(self):
        # the greedy filter drying up must produce a structured error;
        # no organic case is known at n <= 5 (see the exhaustive sweep),
        # so exercise the machinery directly on an impossible demand
        f = fam(3, (1, 2), (1, 3), (2, 3))  # rank-2 members of N_3
        with pytest.raises(SelectionError) as info:
            # pushing the whole level down to rank 1 needs 3 of 3
            # candidates, all pass; push the level up instead: the shade
            # is the single set {1,2,3}, so 3 replacements cannot exist
            _replace_extreme_rank(f, Family(3, ()), 2, "up")
        err = info.value
        assert err.direction == "up" and err.rank == 2
        assert err.needed == 3 and err.found == 1


class TestNormalizePair:
    def test_preserves_everything_exhaustively_n3(self):
        from sperner.verifier import normalization_pair_sweep
        report = normalization_pair_sweep(3)
        assert report.passed
        assert not report.selection_failures
        assert report.crossing_pairs == 90

    def test_worker_count_does_not_change_report(self):
        from sperner.verifier import normalization_pair_sweep
        assert normalization_pair_sweep(4) == normalization_pair_sweep(4, workers=2)

    def test_stage_order_allows_low_partner(self):
        # partner has a member below n/2; pair normalization raises both
        # sides first, so the down phase sees only in-band partners
        a = fam(4, (1, 2, 3, 4))
        b = fam(4, (1,))
        ta, tb = normalize_pair(a, b)
        assert is_antichain(ta.final) and is_antichain(tb.final)
        assert is_cross_intersecting(ta.final, tb.final)
        assert len(ta.final) == 1 and len(tb.final) == 1

    def test_sampled_pairs_n6(self):
        # the full n=6 pair space is out of reach (Dedekind(6)^2 pairs);
        # a seeded sample documents that greedy selection keeps working
        import random
        rng = random.Random(66)
        lo, hi = middle_band(6)
        universe = (1 << 6) - 1
        checked = 0
        while checked < 2000:
            def draw():
                kept = []
                for _ in range(rng.randint(0, 8)):
                    m = rng.randint(0, universe)
                    if all((m & ~o) and (o & ~m) for o in kept):
                        kept.append(m)
                return Family.from_masks(6, kept)
            a, b = draw(), draw()
            if not is_cross_intersecting(a, b):
                continue
            checked += 1
            ta, tb = normalize_pair(a, b)  # no SelectionError expected
            assert len(ta.final) == len(a) and len(tb.final) == len(b)
            assert is_antichain(ta.final) and is_antichain(tb.final)
            assert is_cross_intersecting(ta.final, tb.final)
            for f in (ta.final, tb.final):
                assert all(lo <= m.bit_count() <= hi for m in f.members)

    @settings(max_examples=200)
    @given(st.data())
    def test_random_pairs_preserved(self, data):
        n = data.draw(st.integers(2, 6), label="n")
        lo, hi = middle_band(n)
        universe = st.integers(0, (1 << n) - 1)
        raw_a = data.draw(st.lists(universe, max_size=6), label="a")
        raw_b = data.draw(st.lists(universe, max_size=6), label="b")

        def prune(masks):
            kept = []
            for m in masks:
                if all((m & ~o) and (o & ~m) for o in kept):
                    kept.append(m)
            return Family.from_masks(n, kept)

        a, b = prune(raw_a), prune(raw_b)
        if not is_cross_intersecting(a, b):
            return
        try:
            ta, tb = normalize_pair(a, b)
        except SelectionError:
            return  # loud failure is acceptable; absence is swept elsewhere
        assert len(ta.final) == len(a) and len(tb.final) == len(b)
        assert is_antichain(ta.final) and is_antichain(tb.final)
        assert is_cross_intersecting(ta.final, tb.final)
        for f in (ta.final, tb.final):
            assert all(lo <= m.bit_count() <= hi for m in f.members)
