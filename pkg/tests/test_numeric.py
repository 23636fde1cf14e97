from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from repsum.numeric import binom, format_rational, make_rational, parse_rational

from oracles import binom_by_factorials


class TestBinom:
    def test_factorial_oracle_case(self):
        assert binom(5, 2) == binom_by_factorials(5, 2) == 10

    def test_k_above_n_is_zero(self):
        assert binom(2, 3) == 0

    def test_empty_product(self):
        assert binom(0, 0) == 1

    def test_reference_715(self):
        assert binom(13, 4) == 715

    @pytest.mark.parametrize("n,k", [(-1, 0), (-5, 2), (3, -1), (-2, -2)])
    def test_negative_arguments_are_zero(self, n, k):
        assert binom(n, k) == 0

    def test_matches_factorial_definition_on_grid(self):
        for n in range(26):
            for k in range(-2, n + 3):
                assert binom(n, k) == binom_by_factorials(n, k)

    def test_pascal_identity(self):
        for n in range(1, 61):
            for k in range(1, n + 1):
                assert binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1)

    def test_symmetry(self):
        for n in range(61):
            for k in range(n + 1):
                assert binom(n, k) == binom(n, n - k)


class TestMakeRational:
    def test_gcd_reduction(self):
        r = make_rational(2, 4)
        assert (r.numerator, r.denominator) == (1, 2)

    def test_sign_normalization(self):
        r = make_rational(3, -6)
        assert (r.numerator, r.denominator) == (-1, 2)

    def test_zero_canonical_form(self):
        r = make_rational(0, 7)
        assert (r.numerator, r.denominator) == (0, 1)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValueError):
            make_rational(1, 0)


rationals = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=50
)


@given(rationals)
def test_additive_inverse(a):
    assert a + (-a) == 0


@given(rationals.filter(lambda a: a != 0))
def test_multiplicative_inverse(a):
    assert a * (1 / a) == 1


@given(rationals, rationals, rationals)
def test_field_laws_on_triples(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


class TestTextForm:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("715", Fraction(715)),
            ("-1/2", Fraction(-1, 2)),
            ("3/4", Fraction(3, 4)),
            (" 7 ", Fraction(7)),
            ("+5", Fraction(5)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("bad", ["1.5", "1e3", "a/b", "", "1/", "/2", "1 / 2"])
    def test_parse_rejects_non_rationals(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_parse_rejects_zero_denominator(self):
        with pytest.raises(ValueError):
            parse_rational("1/0")

    @pytest.mark.parametrize("value,text", [(Fraction(715), "715"), (Fraction(-1, 2), "-1/2"), (7, "7")])
    def test_format(self, value, text):
        assert format_rational(value) == text

    @given(rationals)
    def test_round_trip(self, a):
        assert parse_rational(format_rational(a)) == a
