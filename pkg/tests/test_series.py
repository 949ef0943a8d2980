import pytest

from segrecm.errors import ReconstructionFailed
from segrecm.series import HilbertSeries, format_series, parse_series

from oracles import expand_series


def H(pairs, d):
    return HilbertSeries.from_pairs(pairs, d)


POLY_2VARS = H([(0, 1)], 2)          # 1/(1-t)^2
TWISTED = H([(0, 1), (1, 1)], 3)     # (1+t)/(1-t)^3
NILP3 = H([(0, 1), (1, 1), (2, 1)], 0)   # 1 + t + t^2


class TestCoeff:
    def test_two_variable_polynomial_ring(self):
        assert POLY_2VARS.coeff(5) == 6

    def test_twisted_numerator(self):
        # oracle: multiply out the truncated series
        assert expand_series([(0, 1), (1, 1)], 3, 3, 3) == [16]
        assert TWISTED.coeff(3) == 16
        assert TWISTED.coeff(3) == (3 + 1) ** 2

    def test_polynomial_readoff(self):
        h = H([(1, 1), (2, 1)], 0)
        assert h.coeff(0) == 0
        assert h.coeff(1) == 1

    def test_matches_expansion_oracle(self):
        samples = [POLY_2VARS, TWISTED, NILP3, H([(-2, 1), (0, 3)], 1),
                   H([(0, 1), (2, -1)], 4)]
        for h in samples:
            got = [h.coeff(n) for n in range(-4, 12)]
            want = expand_series(list(h.numerator), h.denom_power, -4, 11)
            assert got == want


class TestShift:
    def test_polynomial_ring_shift(self):
        h = H([(0, 1)], 1).shift(2)
        assert h.numerator == ((-2, 1),)
        assert h.denom_power == 1

    def test_shift_inverts(self):
        for h in (POLY_2VARS, TWISTED, NILP3):
            for a in (-3, -1, 0, 2, 5):
                assert h.shift(a).shift(-a) == h

    def test_nilpotent_ring_twist(self):
        # K[x]/(x^3) twisted by 2 is supported in degrees -2..0
        assert NILP3.shift(2).numerator == ((-2, 1), (-1, 1), (0, 1))

    def test_shift_translates_windows(self):
        for a in (-2, 1, 4):
            shifted = TWISTED.shift(a).window(0, 5).values
            direct = TWISTED.window(a, 5 + a).values
            assert shifted == direct


class TestHadamard:
    def test_square_of_plane(self):
        got = POLY_2VARS.hadamard(POLY_2VARS)
        assert got == TWISTED
        window = [got.coeff(n) for n in range(20)]
        assert window == [(n + 1) ** 2 for n in range(20)]

    def test_line_is_idempotent(self):
        line = H([(0, 1)], 1)
        assert line.hadamard(line) == line

    def test_rejects_polynomial_inputs(self):
        with pytest.raises(ReconstructionFailed):
            NILP3.hadamard(POLY_2VARS)
        with pytest.raises(ReconstructionFailed):
            POLY_2VARS.hadamard(NILP3)

    def test_pointwise_law(self):
        samples = [POLY_2VARS, TWISTED, H([(0, 1)], 1), H([(-1, 2), (1, 1)], 2),
                   H([(0, 1), (1, -1), (2, 1)], 3)]
        for h1 in samples:
            for h2 in samples:
                prod = h1.hadamard(h2)
                for n in range(-3, 15):
                    assert prod.coeff(n) == h1.coeff(n) * h2.coeff(n)

    def test_commutative_and_associative(self):
        a, b, c = POLY_2VARS, TWISTED, H([(-1, 1), (0, 1)], 2)
        assert a.hadamard(b) == b.hadamard(a)
        left = a.hadamard(b).hadamard(c)
        right = a.hadamard(b.hadamard(c))
        assert left.window(-5, 15).values == right.window(-5, 15).values

    def test_reduced_after_reconstruction(self):
        # coefficient streams that cancel force denominator reduction
        h1 = H([(0, 1)], 1)
        h2 = H([(0, 1), (1, 1)], 1)   # stream 1,2,2,2,...
        out = h1.hadamard(h2)
        assert out.denom_power == 0 or sum(c for _, c in out.numerator) != 0


class TestWindow:
    def test_plane_window(self):
        assert POLY_2VARS.window(0, 3).values == (1, 2, 3, 4)

    def test_twisted_window(self):
        assert expand_series([(0, 1), (1, 1)], 3, 0, 2) == [1, 4, 9]
        assert TWISTED.window(0, 2).values == (1, 4, 9)

    def test_negative_support(self):
        h = H([(-1, 1), (0, 1)], 0)
        assert h.window(-2, 1).values == (0, 1, 1, 0)

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            POLY_2VARS.window(3, 1)


class TestReducedForm:
    def test_constructor_cancels(self):
        h = H([(0, 1), (1, -1)], 1)     # (1-t)/(1-t)
        assert h == H([(0, 1)], 0)

    def test_double_cancellation(self):
        h = H([(0, 1), (1, -2), (2, 1)], 3)   # (1-t)^2/(1-t)^3
        assert h == H([(0, 1)], 1)

    def test_zero_numerator(self):
        h = H([], 4)
        assert h.denom_power == 0
        assert h.coeff(3) == 0

    def test_direct_construction_rejects_unreduced(self):
        with pytest.raises(ValueError):
            HilbertSeries(((0, 1), (1, -1)), 1)


class TestTextEncoding:
    def test_round_trip(self):
        for h in (POLY_2VARS, TWISTED, NILP3, H([], 0), H([(-2, 3)], 1)):
            assert parse_series(format_series(h)) == h

    def test_format(self):
        assert format_series(TWISTED) == "num: 1 0 1 1 ; den: 3"
        assert format_series(H([], 0)) == "num: ; den: 0"

    def test_parse_errors(self):
        for bad in ("num: 1 ; den: 2", "1 0 ; den: 2", "num: 1 0 den: 2",
                    "num: x 0 ; den: 2"):
            with pytest.raises(ValueError):
                parse_series(bad)
