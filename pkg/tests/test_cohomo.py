import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from segrecm.cohomo import (TwistInterval, anticanonical_cm_m2,
                            canonical_power_cm, cm_chain, cm_twist_interval,
                            cm_uniform_twist, cm_uniform_twist_raw,
                            cohomology_support, dual_shift, prop_depth_m2)
from segrecm.errors import (BadTwist, DimensionTooSmall, NotApplicable,
                            NotPositive, NotSorted)


def sorted_vectors(max_m, lo, hi):
    for m in range(1, max_m + 1):
        for combo in combinations_with_replacement(range(hi, lo - 1, -1), m):
            yield list(combo)


class TestCohomologySupport:
    def test_two_planes(self):
        rep = cohomology_support([(2, -2, 0), (2, -2, 0)])
        assert (rep.dim, rep.depth, rep.is_cm) == (3, 3, True)
        assert [w.subset for w in rep.witnesses] == [(1, 2)]
        assert rep.witnesses[0].lo is None

    def test_depth_two_witness(self):
        rep = cohomology_support([(3, -3, 0), (2, -2, -3)])
        assert (rep.dim, rep.depth, rep.is_cm) == (4, 2, False)
        assert rep.witnesses[0] == (2, (2,), 0, 1)

    def test_three_uniform_twists(self):
        rep = cohomology_support([(2, -1, 1)] * 3)
        assert rep.is_cm
        assert [w.subset for w in rep.witnesses] == [(1, 2, 3)]

    def test_single_factor(self):
        rep = cohomology_support([(4, -2, 7)])
        assert (rep.dim, rep.depth, rep.is_cm) == (4, 4, True)

    def test_rejects_dimension_one(self):
        with pytest.raises(DimensionTooSmall):
            cohomology_support([(2, -2, 0), (1, -1, 0)])

    def test_global_shift_invariance(self):
        rng = random.Random(3)
        for _ in range(200):
            m = rng.randint(1, 4)
            factors = [(rng.randint(2, 4), rng.randint(-5, 2), rng.randint(-6, 6))
                       for _ in range(m)]
            base = cohomology_support(factors)
            c = rng.randint(-4, 4)
            moved = cohomology_support([(d, a, s + c) for d, a, s in factors])
            assert (base.dim, base.depth, base.is_cm) == \
                (moved.dim, moved.depth, moved.is_cm)


class TestPropDepthM2:
    def test_mixed_dimension_case(self):
        rep = prop_depth_m2(2, 1, -2, -1, 0, -1)
        assert (rep.dim, rep.depth) == (2, 1)

    def test_curve_pair_always_cm(self):
        for rho, sigma, a, b in [(-1, -1, 0, 0), (3, -2, 5, -5), (0, 0, 2, 1)]:
            rep = prop_depth_m2(1, 1, rho, sigma, a, b)
            assert rep.is_cm and rep.dim == 1

    def test_cm_case(self):
        rep = prop_depth_m2(3, 2, -3, -2, 0, 0)
        assert rep.is_cm and rep.depth == 4

    def test_swaps_inputs(self):
        a = prop_depth_m2(2, 3, -2, -3, 5, 1)
        b = prop_depth_m2(3, 2, -3, -2, 1, 5)
        assert a == b

    def test_agrees_with_subset_analysis(self):
        # small slice of the acceptance grid
        for r in (2, 3):
            for s in (2, 3):
                for rho in (-3, -1):
                    for sigma in (-2, -1):
                        for a in range(-4, 5):
                            for b in range(-4, 5):
                                cases = prop_depth_m2(r, s, rho, sigma, a, b)
                                kunneth = cohomology_support(
                                    [(r, rho, a), (s, sigma, b)])
                                assert cases.depth == kunneth.depth
                                assert cases.is_cm == kunneth.is_cm


class TestUniformTwist:
    def test_examples(self):
        assert cm_uniform_twist([3, 2], 2) is True
        assert cm_uniform_twist([3, 2], 3) is False
        for a in range(-6, 7):
            assert cm_uniform_twist([2, 2, 2], a) is True

    def test_raw_examples(self):
        assert cm_uniform_twist_raw([3, 2], -1) is True
        assert cm_uniform_twist_raw([4, 2], -1) is False
        assert cm_uniform_twist_raw([5], 3) is True

    def test_rejects_unsorted(self):
        with pytest.raises(NotSorted):
            cm_uniform_twist([2, 3], 1)

    def test_raw_is_permutation_invariant(self):
        rng = random.Random(5)
        for _ in range(100):
            rhos = [rng.randint(-6, 6) for _ in range(rng.randint(1, 5))]
            a = rng.randint(-5, 5)
            shuffled = rhos[:]
            rng.shuffle(shuffled)
            assert cm_uniform_twist_raw(rhos, a) == cm_uniform_twist_raw(shuffled, a)

    def test_equivalence_small_sweep(self):
        for rhos in sorted_vectors(3, -3, 3):
            for a in range(-5, 6):
                fast = cm_uniform_twist(rhos, a)
                raw = cm_uniform_twist_raw(rhos, a)
                assert fast == raw, (rhos, a)
                if a not in (0, 1):
                    assert cm_chain(rhos, a) == fast, (rhos, a)

    def test_reduction_from_support_analysis(self):
        # uniform twists are the shifts a_i = -a rho_i on factors with
        # a-invariant -rho_i; CM there must match the chain criterion
        rng = random.Random(9)
        for _ in range(300):
            m = rng.randint(1, 4)
            rhos = sorted((rng.randint(-4, 4) for _ in range(m)), reverse=True)
            a = rng.randint(-5, 5)
            dims = [rng.randint(2, 4) for _ in range(m)]
            factors = [(dims[i], -rhos[i], -a * rhos[i]) for i in range(m)]
            assert cohomology_support(factors).is_cm == cm_uniform_twist(rhos, a)


class TestChain:
    def test_anticanonical_chain(self):
        assert cm_chain([3, 2], -1) is True
        assert cm_chain([4, 2], -1) is False

    def test_constant_is_two_for_negative_one(self):
        # for a = -1 the chain constant is 2
        rng = random.Random(21)
        for _ in range(100):
            m = rng.randint(1, 5)
            rhos = sorted((rng.randint(1, 9) for _ in range(m)), reverse=True)
            want = all(Fraction(2) ** (j + 1) * rhos[j + 1] >
                       Fraction(2) ** j * rhos[j] for j in range(m - 1))
            assert cm_chain(rhos, -1) == want
            assert cm_uniform_twist(rhos, -1) == want

    def test_rejects_degenerate_twists(self):
        for a in (0, 1):
            with pytest.raises(BadTwist):
                cm_chain([3, 2], a)


class TestAnticanonicalM2:
    def test_examples(self):
        assert anticanonical_cm_m2(-2, -2) is True
        assert anticanonical_cm_m2(-1, -3) is False
        assert anticanonical_cm_m2(-2, -3) is True

    def test_cross_check(self):
        assert cm_uniform_twist([3, 1], -1) is False
        assert cm_uniform_twist([3, 2], -1) is True


class TestTwistInterval:
    def test_ratio_three_halves(self):
        interval = cm_twist_interval([3, 2])
        assert interval.kind == "open_interval"
        assert (interval.lo, interval.hi) == (Fraction(-2), Fraction(3))
        assert interval.integer_points() == [-1, 0, 1, 2]
        scan = [a for a in range(-10, 11) if cm_uniform_twist([3, 2], a)]
        assert scan == interval.integer_points()

    def test_ratio_two(self):
        interval = cm_twist_interval([4, 2])
        assert (interval.lo, interval.hi) == (Fraction(-1), Fraction(2))
        assert interval.integer_points() == [0, 1]

    def test_all_equal(self):
        interval = cm_twist_interval([5, 5, 5])
        assert interval.kind == "all_integers"
        assert interval.integer_points() is None
        assert interval.contains(-100)

    def test_rejects_nonpositive(self):
        with pytest.raises(NotPositive):
            cm_twist_interval([3, 0])
        with pytest.raises(NotSorted):
            cm_twist_interval([2, 3])

    def test_direct_construction_validates(self):
        with pytest.raises(ValueError):
            TwistInterval("open_interval", lo=Fraction(2), hi=Fraction(1))


class TestCanonicalPowers:
    def test_examples(self):
        assert canonical_power_cm([3, 2], 2) is True
        assert canonical_power_cm([4, 2], -1) is False
        assert canonical_power_cm([3, 2], 3) is False

    def test_matches_uniform_twist(self):
        rng = random.Random(31)
        for _ in range(100):
            m = rng.randint(2, 5)
            rhos = sorted((rng.randint(1, 8) for _ in range(m)), reverse=True)
            if len(set(rhos)) == 1:
                continue
            a = rng.randint(-10, 10)
            assert canonical_power_cm(rhos, a) == cm_uniform_twist(rhos, a)

    def test_not_applicable_for_equal_entries(self):
        with pytest.raises(NotApplicable):
            canonical_power_cm([3, 3], 5)


class TestDualShift:
    def test_examples(self):
        assert dual_shift([-2, -3]) == [2, 3]
        assert dual_shift([0, 0, 0]) == [0, 0, 0]

    def test_involution(self):
        rng = random.Random(37)
        for _ in range(50):
            v = [rng.randint(-20, 20) for _ in range(rng.randint(1, 6))]
            assert dual_shift(dual_shift(v)) == v
