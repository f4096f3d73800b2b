from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compalg.scalars import (
    GF,
    QQ,
    FieldMismatchError,
    FpElem,
    FunctionField,
    Poly,
    RatFunc,
    ReductionError,
    ScalarSyntaxError,
    SpecializationError,
    parse_scalar,
    poly_eval,
    reduce_mod_p,
)

FA = FunctionField(["alpha"])


def rf(text):
    return parse_scalar(text, FA)


class TestRationals:
    def test_exact_sum(self):
        assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)

    def test_fp_inverse(self):
        assert FpElem(2, 5).inverse() == FpElem(3, 5)
        assert FpElem(2, 5) * FpElem(3, 5) == FpElem(1, 5)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1) / Fraction(0)
        with pytest.raises(ZeroDivisionError):
            FpElem(1, 5) / FpElem(0, 5)
        with pytest.raises(ZeroDivisionError):
            rf("1") / rf("0")

    def test_mixed_field_rejected(self):
        with pytest.raises(FieldMismatchError):
            FpElem(1, 5) + FpElem(1, 7)
        with pytest.raises(FieldMismatchError):
            rf("alpha") + parse_scalar("beta", FunctionField(["beta"]))


class TestPolyCanonical:
    def test_cancellation(self):
        # (alpha^2 - 1)/(alpha - 1) reduces to alpha + 1
        v = rf("(alpha*alpha-1)/(alpha-1)")
        assert v == rf("alpha+1")
        assert v.is_poly()
        assert str(v) == "1+alpha"

    def test_denominator_normalization(self):
        v = rf("(1+alpha)/(1-alpha)")
        assert str(v) == "(1+alpha)/(1-alpha)"
        # same value written with the opposite sign normalizes identically
        w = rf("(-1-alpha)/(alpha-1)")
        assert str(w) == "(1+alpha)/(1-alpha)"
        assert v == w

    def test_idempotent_normalization(self):
        v = rf("(2+2*alpha)/(2-2*alpha)")
        again = RatFunc(v.num, v.den)
        assert again.num == v.num and again.den == v.den

    def test_monomial_cancellation(self):
        v = rf("(alpha^3+alpha^2)/(alpha^2)")
        assert v == rf("alpha+1")

    def test_power_parse(self):
        assert rf("alpha^3") == rf("alpha*alpha*alpha")

    def test_syntax_errors(self):
        with pytest.raises(ScalarSyntaxError):
            rf("alpha +")
        with pytest.raises(ScalarSyntaxError):
            rf("(1+alpha")
        with pytest.raises(ScalarSyntaxError):
            rf("gamma")
        with pytest.raises(ScalarSyntaxError):
            parse_scalar("alpha", QQ)


class TestEval:
    def test_spec_values(self):
        assert poly_eval(rf("(1+alpha)/(1-alpha)"), {"alpha": 3}) == Fraction(-2)
        assert poly_eval(rf("alpha+1"), {"alpha": 0}) == Fraction(1)

    def test_excluded_point(self):
        with pytest.raises(SpecializationError) as err:
            poly_eval(rf("(1+alpha)/(1-alpha)"), {"alpha": 1})
        assert "alpha" in str(err.value.polynomial)

    def test_missing_parameter(self):
        with pytest.raises(KeyError):
            poly_eval(rf("alpha"), {})


class TestReduction:
    def test_spec_values(self):
        assert reduce_mod_p(Fraction(1, 2), 5) == FpElem(3, 5)
        assert reduce_mod_p(Fraction(-1), 7) == FpElem(6, 7)

    def test_bad_denominator(self):
        with pytest.raises(ReductionError):
            reduce_mod_p(Fraction(1, 5), 5)

    @given(
        st.fractions(min_value=-50, max_value=50, max_denominator=9),
        st.fractions(min_value=-50, max_value=50, max_denominator=9),
    )
    @settings(max_examples=80, deadline=None)
    def test_ring_homomorphism(self, a, b):
        p = 11
        if a.denominator % p == 0 or b.denominator % p == 0:
            return
        assert reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p)
        assert reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p)


small_frac = st.fractions(min_value=-8, max_value=8, max_denominator=4)


def poly_strategy():
    monos = st.tuples(st.integers(0, 2), st.integers(0, 2))
    return st.dictionaries(monos, small_frac, max_size=4).map(
        lambda terms: Poly(("alpha", "beta"), terms)
    )


class TestRingAxioms:
    @given(poly_strategy(), poly_strategy(), poly_strategy())
    @settings(max_examples=60, deadline=None)
    def test_poly_ring(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @given(poly_strategy(), poly_strategy(), st.integers(1, 40))
    @settings(max_examples=40, deadline=None)
    def test_ratfunc_field(self, a, b, d):
        den = Poly(("alpha", "beta"), {(1, 0): Fraction(1), (0, 0): Fraction(d)})
        x = RatFunc(a, den)
        y = RatFunc(b, den)
        assert (x + y) * den == a + b
        assert x * y == y * x
        if y:
            assert (x / y) * y == x

    @given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
    @settings(max_examples=50, deadline=None)
    def test_fp_ring(self, a, b, c):
        p = 7
        x, y, z = FpElem(a, p), FpElem(b, p), FpElem(c, p)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)

    @given(poly_strategy(), poly_strategy())
    @settings(max_examples=40, deadline=None)
    def test_eval_commutes_with_arithmetic(self, a, b):
        point = {"alpha": Fraction(2, 3), "beta": Fraction(-1, 2)}
        assert poly_eval(a * b, point) == poly_eval(a, point) * poly_eval(b, point)
        assert poly_eval(a + b, point) == poly_eval(a, point) + poly_eval(b, point)


class TestFieldHandles:
    def test_coercion(self):
        assert QQ.coerce("3/4") == Fraction(3, 4)
        assert FA.coerce(2) == rf("2")
        assert GF(5).coerce(Fraction(1, 2)) == FpElem(3, 5)

    def test_gf_requires_prime(self):
        with pytest.raises(ValueError):
            GF(6)

    def test_canonical_string_round_trip(self):
        for text in ["(1+alpha)/(1-alpha)", "-2", "1/2", "alpha^2", "2*alpha-3"]:
            v = rf(text)
            assert rf(str(v)) == v
