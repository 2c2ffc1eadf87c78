"""Exact integer Laurent polynomial arithmetic."""

import pytest
from hypothesis import given, strategies as st

from kauffman.laurent import (
    InexactDivisionError,
    LaurentPoly,
    NotDivisibleByFourError,
)

polys = st.dictionaries(
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPoly)

nonzero_polys = polys.filter(lambda p: not p.is_zero())

plain_polys = st.dictionaries(
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(LaurentPoly)


class TestConstruction:
    def test_zero_drops_terms(self):
        assert LaurentPoly({3: 0, 1: 2}) == LaurentPoly({1: 2})
        assert LaurentPoly({3: 0}).is_zero()

    def test_constructors(self):
        assert LaurentPoly.zero().is_zero()
        assert LaurentPoly.one() == LaurentPoly({0: 1})
        assert LaurentPoly.const(-4) == LaurentPoly({0: -4})
        assert LaurentPoly.monomial(3, -5) == LaurentPoly({-5: 3})

    def test_equality_and_hash(self):
        a = LaurentPoly({2: 1, -2: 1})
        b = LaurentPoly({-2: 1, 2: 1})
        assert a == b and hash(a) == hash(b)
        assert a != LaurentPoly({2: 1})


class TestDegrees:
    def test_degrees(self):
        p = LaurentPoly({5: 2, -3: -1})
        assert p.max_degree() == 5
        assert p.min_degree() == -3
        assert p.coeff(5) == 2 and p.coeff(0) == 0

    def test_zero_has_no_degree(self):
        with pytest.raises(ValueError, match="zero polynomial"):
            LaurentPoly.zero().max_degree()
        with pytest.raises(ValueError, match="zero polynomial"):
            LaurentPoly.zero().min_degree()

    def test_terms_highest_first(self):
        p = LaurentPoly({-1: 3, 4: 1, 2: -2})
        assert list(p.terms()) == [(4, 1), (2, -2), (-1, 3)]


class TestRingAxioms:
    @given(polys, polys, polys)
    def test_addition_associative_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(polys)
    def test_additive_identity_and_inverse(self, a):
        zero = LaurentPoly.zero()
        assert a + zero == a
        assert a - a == zero

    @given(polys, polys, polys)
    def test_multiplication(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polys)
    def test_multiplicative_identity(self, a):
        assert a * LaurentPoly.one() == a

    @given(polys, st.integers(min_value=-8, max_value=8))
    def test_shift_is_monomial_multiplication(self, a, k):
        assert a.shift(k) == a * LaurentPoly.monomial(1, k)

    @given(polys, st.integers(min_value=0, max_value=5))
    def test_power_is_repeated_multiplication(self, a, n):
        expected = LaurentPoly.one()
        for _ in range(n):
            expected = expected * a
        assert a**n == expected

    @given(polys)
    def test_invert_variable_involution(self, a):
        assert a.invert_variable().invert_variable() == a

    @given(polys, polys)
    def test_invert_variable_is_ring_map(self, a, b):
        assert (a * b).invert_variable() == (
            a.invert_variable() * b.invert_variable()
        )


class TestExactDivision:
    @given(polys, nonzero_polys)
    def test_product_division_round_trip(self, a, b):
        assert (a * b).exact_div(b) == a

    def test_inexact_division_raises(self):
        p = LaurentPoly({2: 1, 0: 1, -1: 1})
        with pytest.raises(InexactDivisionError):
            p.exact_div(LaurentPoly({1: 1, 0: 1}))

    def test_inexact_division_terminates(self):
        # 1 / (A + 1) has an infinite formal expansion in descending
        # powers; the divider must refuse it instead of following it
        with pytest.raises(InexactDivisionError):
            LaurentPoly.one().exact_div(LaurentPoly({1: 1, 0: 1}))
        with pytest.raises(InexactDivisionError):
            LaurentPoly({0: 1, -7: 2}).exact_div(LaurentPoly({2: -1, -2: -1}))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            LaurentPoly.one().exact_div(LaurentPoly.zero())


class TestConversions:
    def test_to_q_negates_and_quarters(self):
        p = LaurentPoly({16: -1, 12: 1, 4: 1})
        assert p.to_q() == LaurentPoly({-4: -1, -3: 1, -1: 1})

    def test_to_q_rejects_stray_exponents(self):
        with pytest.raises(NotDivisibleByFourError):
            LaurentPoly({2: 1}).to_q()

    def test_canonical_text(self):
        delta = LaurentPoly({2: -1, -2: -1})
        cube = delta * delta * delta
        assert cube.to_text() == "-A^6 - 3*A^2 - 3*A^-2 - A^-6"
        assert LaurentPoly.zero().to_text() == "0"
        assert LaurentPoly({0: -7}).to_text() == "-7"
        assert LaurentPoly({1: 1}).to_text(var="q") == "q"

    def test_to_pairs_descending(self):
        p = LaurentPoly({-2: 5, 6: 1})
        assert p.to_pairs() == [[6, 1], [-2, 5]]

    @given(plain_polys, plain_polys)
    def test_evaluate_poly_is_substitution_hom(self, a, b):
        x = LaurentPoly({1: 1, 0: 2})
        assert (a + b).evaluate_poly(x) == a.evaluate_poly(
            x
        ) + b.evaluate_poly(x)
        assert (a * b).evaluate_poly(x) == a.evaluate_poly(
            x
        ) * b.evaluate_poly(x)

    def test_evaluate_poly_rejects_negative_exponents(self):
        with pytest.raises(ValueError, match="plain polynomial"):
            LaurentPoly({-1: 1}).evaluate_poly(LaurentPoly.one())
