from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homtwist.scalar import ParseError, Scalar, parse_scalar


class TestParse:
    def test_rational_literal(self):
        assert parse_scalar("1/2", []) == Scalar.constant(Fraction(1, 2))

    def test_product_expansion(self):
        # (a-b)*b == a*b - b^2
        got = parse_scalar("(a-b)*b", ["a", "b"])
        expected = parse_scalar("a*b - b^2", ["a", "b"])
        assert got == expected

    def test_negative_half_times_sum(self):
        got = parse_scalar("-1/2*(1+q)", ["q"])
        expected = parse_scalar("-1/2 - 1/2*q", ["q"])
        assert got == expected

    def test_power(self):
        assert parse_scalar("q^2", ["q"]) == Scalar.variable("q", ["q"]) ** 2

    def test_unary_minus_forms(self):
        params = ["a"]
        assert parse_scalar("-a", params) == -Scalar.variable("a", params)
        assert parse_scalar("--a", params) == Scalar.variable("a", params)
        assert parse_scalar("2*-a", params) == Scalar.constant(-2, params) * Scalar.variable("a", params)
        assert parse_scalar("-(a+1)", params) == -(Scalar.variable("a", params) + 1)

    def test_minus_binds_below_power(self):
        # -a^2 is -(a^2)
        params = ["a"]
        assert parse_scalar("-a^2", params) == -(Scalar.variable("a", params) ** 2)

    def test_whitespace(self):
        assert parse_scalar(" 1 + q ", ["q"]) == Scalar.constant(1, ["q"]) + Scalar.variable("q", ["q"])

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_scalar("a+*b", ["a", "b"])
        assert err.value.position == 2

    def test_unknown_identifier(self):
        with pytest.raises(ParseError, match="unknown identifier 'c'"):
            parse_scalar("a*c", ["a", "b"])

    def test_negative_exponent(self):
        with pytest.raises(ParseError, match="negative exponent"):
            parse_scalar("a^-1", ["a"])

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_scalar("a b", ["a", "b"])

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="zero denominator"):
            parse_scalar("1/0", [])

    def test_chained_power_rejected(self):
        with pytest.raises(ParseError):
            parse_scalar("a^2^3", ["a"])


class TestArithmetic:
    def test_additive_inverse(self):
        a = Scalar.variable("a", ["a"])
        assert (a + (-a)).is_zero()

    def test_mul_expansion(self):
        a, b = (Scalar.variable(n, ["a", "b"]) for n in "ab")
        assert (a - b) * b == a * b - b ** 2

    def test_pow(self):
        q = Scalar.variable("q", ["q"])
        assert q ** 2 == q * q
        assert q ** 0 == Scalar.one(["q"])

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError, match="negative exponent"):
            Scalar.variable("q", ["q"]) ** -1

    def test_parameter_mismatch(self):
        a = Scalar.variable("a", ["a"])
        b = Scalar.variable("b", ["b"])
        with pytest.raises(ValueError, match="parameter list mismatch"):
            a + b

    def test_int_promotion(self):
        q = Scalar.variable("q", ["q"])
        assert 1 + q == q + 1 == parse_scalar("q+1", ["q"])
        assert 2 * q == q * 2

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            Scalar.variable("q", ["q"]) * 0.5


class TestIsZero:
    def test_algebraic_identity(self):
        a, b = (Scalar.variable(n, ["a", "b"]) for n in "ab")
        assert (a * b - b ** 2 - (a - b) * b).is_zero()

    def test_nonzero(self):
        a, b = (Scalar.variable(n, ["a", "b"]) for n in "ab")
        assert not (a - b).is_zero()

    def test_zero_constant(self):
        assert Scalar.constant(Fraction(0, 1)).is_zero()


class TestEvaluate:
    def test_example(self):
        s = parse_scalar("(a-b)*b", ["a", "b"])
        assert s.evaluate({"a": 1, "b": 2}) == Fraction(-2)

    def test_square_at_one(self):
        assert parse_scalar("q^2", ["q"]).evaluate({"q": 1}) == 1

    def test_constant_empty_assignment(self):
        assert parse_scalar("7/3", []).evaluate({}) == Fraction(7, 3)

    def test_unused_parameter_not_required(self):
        s = parse_scalar("a", ["a", "b"])
        assert s.evaluate({"a": 5}) == 5

    def test_missing_parameter(self):
        with pytest.raises(ValueError, match="missing parameter value"):
            parse_scalar("a*b", ["a", "b"]).evaluate({"a": 1})


class TestSubstitute:
    def test_partial(self):
        s = parse_scalar("a*q + q^2", ["a", "q"])
        t = s.substitute({"a": 2})
        assert t.params == ("q",)
        assert t == parse_scalar("2*q + q^2", ["q"])

    def test_full(self):
        s = parse_scalar("(a-b)*b", ["a", "b"])
        assert s.substitute({"a": 1, "b": 2}) == Scalar.constant(-2)

    def test_unknown_key(self):
        with pytest.raises(ValueError, match="unknown parameter"):
            parse_scalar("a", ["a"]).substitute({"z": 1})


_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def _polys(params=("a", "b")):
    exps = st.tuples(*(st.integers(0, 3) for _ in params))
    return st.dictionaries(exps, _rationals, max_size=4).map(
        lambda terms: Scalar(params, terms)
    )


class TestProperties:
    @given(_polys())
    def test_print_parse_round_trip(self, s):
        assert parse_scalar(str(s), s.params) == s

    @given(_polys())
    def test_canonical_idempotence(self, s):
        assert Scalar(s.params, s.terms) == s

    @given(_polys(), _polys(), _polys())
    @settings(max_examples=40)
    def test_ring_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        assert x * Scalar.one(x.params) == x
        assert x + Scalar.zero(x.params) == x

    @given(_polys(), _polys(),
           st.fractions(min_value=-9, max_value=9, max_denominator=5),
           st.fractions(min_value=-9, max_value=9, max_denominator=5))
    @settings(max_examples=40)
    def test_evaluate_is_ring_homomorphism(self, x, y, va, vb):
        env = {"a": va, "b": vb}
        assert (x * y).evaluate(env) == x.evaluate(env) * y.evaluate(env)
        assert (x + y).evaluate(env) == x.evaluate(env) + y.evaluate(env)
