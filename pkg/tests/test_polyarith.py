from fractions import Fraction

import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from coxgrowth.polyarith import (IntPolynomial, RationalFunction, poly_gcd, rf_add,
                                 rf_normalize, rf_reverse, rf_series_coeffs)

from conftest import polynomials, rational_functions

P = lambda *c: IntPolynomial(c)  # noqa: E731


def rf(num, den=(1,)):
    return rf_normalize(IntPolynomial(tuple(num)), IntPolynomial(tuple(den)))


class TestIntPolynomial:
    def test_strips_trailing_zeros(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).is_zero()
        assert P().degree == -1

    def test_arithmetic(self):
        a, b = P(1, 1), P(1, -1)
        assert a * b == P(1, 0, -1)
        assert a + b == P(2)
        assert a - a == P()
        assert a ** 3 == P(1, 3, 3, 1)

    def test_divmod_exact_and_remainder(self):
        q, r = P(1, 0, -1).divmod(P(1, -1))
        assert (q, r) == (P(1, 1), P())
        q, r = P(1, 0, 1).divmod(P(1, 1))
        assert q * P(1, 1) + r == P(1, 0, 1)

    def test_format_matches_ascending_style(self):
        assert P(1, 4, 8, -1).format() == "1+4t+8t^2-t^3"
        assert P(-1, 0, 2).format() == "-1+2t^2"
        assert P().format() == "0"

    def test_json_round_trip_big_integers(self):
        p = P(1, 4032330316365198, -(10 ** 30))
        assert p.to_json() == ["1", "4032330316365198", "-" + "1" + "0" * 30]
        assert IntPolynomial.from_json(p.to_json()) == p

    def test_sign_at_matches_fraction_evaluation(self):
        p = P(3, -7, 0, 2)
        for num, den in [(1, 2), (-5, 3), (7, 11), (0, 1)]:
            v = p(Fraction(num, den))
            assert p.sign_at(num, den) == (v > 0) - (v < 0)

    @given(polynomials(), polynomials(), polynomials(nonzero=True))
    def test_gcd_divides_both_and_keeps_common_factor(self, a, b, c):
        f, g = a * c, b * c
        assume(f or g)
        d = poly_gcd(f, g)
        # d is primitive, so dividing over Q means dividing over Z
        assert d.divides(f) and d.divides(g)
        assert d.degree >= c.degree


class TestNormalize:
    def test_jointly_negated_pair(self):
        # numerator/denominator both printed with leading -1
        num = IntPolynomial((-1, -2, -3))
        den = IntPolynomial((-1, 2, -2))
        f = rf_normalize(num, den)
        assert f.num == P(1, 2, 3) and f.den == P(1, -2, 2)
        assert f.den[0] > 0

    def test_identity_after_cancellation(self):
        assert rf((0, 1), (0, 1)) == RationalFunction(P(1), P(1))

    def test_factor_cancellation(self):
        assert rf((1, 0, -1), (1, -1)) == RationalFunction(P(1, 1), P(1))

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError, match="division by zero polynomial"):
            rf_normalize(P(1), P())

    def test_den_with_zero_constant_term(self):
        f = rf((1,), (0, -2))
        assert f.den == P(0, 2) and f.num == P(-1)

    @given(rational_functions())
    def test_idempotent(self, f):
        assert rf_normalize(f.num, f.den) == f

    @given(rational_functions())
    def test_invariants(self, f):
        assert not f.den.is_zero()
        assert poly_gcd(f.num, f.den).degree <= 0
        assert f.den[f.den.lowest_term()] > 0
        from math import gcd
        assert gcd(f.num.content, f.den.content) == 1


class TestAdd:
    def test_additive_inverse(self):
        assert rf_add(rf((1,), (1, -1)), rf((-1,), (1, -1))) == rf((0,))

    def test_one_plus_geometric(self):
        s = rf_add(rf((1,)), rf((1,), (1, -1)))
        assert s == RationalFunction(P(2, -1), P(1, -1))
        # cross-check at t = 1/2 with exact rationals
        t = Fraction(1, 2)
        assert s(t) == 1 + 1 / (1 - t) == 3

    def test_symmetric_pair(self):
        assert rf_add(rf((1,), (1, 1)), rf((1,), (1, -1))) == RationalFunction(P(2), P(1, 0, -1))

    @given(rational_functions(), rational_functions())
    def test_commutative(self, a, b):
        assert rf_add(a, b) == rf_add(b, a)

    @given(rational_functions(), rational_functions(), rational_functions())
    def test_associative(self, a, b, c):
        assert rf_add(rf_add(a, b), c) == rf_add(a, rf_add(b, c))

    @given(rational_functions(), rational_functions(),
           st.fractions(min_value=-3, max_value=3, max_denominator=7))
    def test_evaluation_consistency(self, a, b, q):
        s = rf_add(a, b)
        assume(a.den(q) != 0 and b.den(q) != 0 and s.den(q) != 0)
        assert s(q) == a(q) + b(q)


class TestReverse:
    def test_hand_substitution(self):
        # (1 + 1/t)/(1 - 2/t) = (t + 1)/(t - 2) = (-1 - t)/(2 - t)
        f = rf_reverse(rf((1, 1), (1, -2)))
        assert f == RationalFunction(P(-1, -1), P(2, -1))

    def test_constant_fixed(self):
        assert rf_reverse(rf((5,))) == rf((5,))

    def test_monomial(self):
        assert rf_reverse(rf((0, 1))) == RationalFunction(P(1), P(0, 1))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            rf_reverse(rf((0,)))

    @given(rational_functions())
    def test_involution(self, f):
        assume(not f.is_zero())
        assert rf_reverse(rf_reverse(f)) == f

    @given(rational_functions(), st.fractions(min_value=-4, max_value=4, max_denominator=5))
    def test_substitution(self, f, q):
        assume(not f.is_zero() and q != 0)
        g = rf_reverse(f)
        assume(f.den(1 / q) != 0 and g.den(q) != 0)
        assert g(q) == f(1 / q)


class TestSeries:
    def test_334_initial_values(self):
        f = rf((1, 3, 5, 6, 5, 3, 1), (1, 0, -1, -1, -1, 0, 1))
        assert rf_series_coeffs(f, 7) == [1, 3, 6, 10, 15, 22, 31]

    def test_free_product_closed_form(self):
        # (1+t)/(1-2t) = 1 + sum_{k>=1} 3 * 2^(k-1) t^k
        f = rf((1, 1), (1, -2))
        expected = [1] + [3 * 2 ** (k - 1) for k in range(1, 30)]
        assert rf_series_coeffs(f, 30) == expected
        assert expected[:5] == [1, 3, 6, 12, 24]

    def test_constant(self):
        assert rf_series_coeffs(rf((1,)), 3) == [1, 0, 0]

    def test_count_zero(self):
        assert rf_series_coeffs(rf((1, 1), (1, -2)), 0) == []

    def test_pole_at_zero(self):
        with pytest.raises(ValueError, match="not a power series at 0"):
            rf_series_coeffs(rf((1,), (0, 1)), 3)

    def test_non_unit_constant_term_gives_fractions(self):
        assert rf_series_coeffs(rf((1,), (2, -1)), 3) == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]

    @given(rational_functions(), st.integers(0, 25))
    def test_convolution_identity(self, f, count):
        assume(f.den[0] != 0)
        a = rf_series_coeffs(f, count)
        D, N = f.den.degree, f.num.degree
        for k in range(count):
            conv = sum(f.den[r] * a[k - r] for r in range(0, min(k, D) + 1))
            assert conv == (f.num[k] if k <= N else 0)
