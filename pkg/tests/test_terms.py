import pytest
from hypothesis import given, strategies as st

from meadows import (
    ONE, ZERO, Add, Inv, Mul, Neg, ParseError, Var,
    free_vars, numeral, parse_term, print_term, substitute, term_size,
)

X, Y, Z = Var("x"), Var("y"), Var("z")


leaves = st.one_of(
    st.just(ZERO),
    st.just(ONE),
    st.builds(Var, st.sampled_from(["x", "y", "z", "a_1"])),
)
terms = st.recursive(
    leaves,
    lambda child: st.one_of(
        st.builds(Neg, child),
        st.builds(Inv, child),
        st.builds(Add, child, child),
        st.builds(Mul, child, child),
    ),
    max_leaves=30,
)


class TestParse:
    def test_inverse_of_zero(self):
        assert parse_term("0^-1") == Inv(ZERO)

    def test_restricted_inverse_shape(self):
        assert parse_term("x*(x*x^-1)") == Mul(X, Mul(X, Inv(X)))

    def test_literal_three_is_left_nested_ones(self):
        assert parse_term("3") == Add(Add(ONE, ONE), ONE)

    def test_literal_zero_and_one(self):
        assert parse_term("0") == ZERO
        assert parse_term("1") == ONE

    def test_precedence_mul_over_add(self):
        assert parse_term("x+y*z") == Add(X, Mul(Y, Z))

    def test_division_associates_left(self):
        assert parse_term("x/y/z") == Mul(Mul(X, Inv(Y)), Inv(Z))

    def test_division_desugars(self):
        assert parse_term("x/y") == Mul(X, Inv(Y))

    def test_subtraction_desugars(self):
        assert parse_term("x-y") == Add(X, Neg(Y))

    def test_functional_inverse(self):
        assert parse_term("inv(x+y)") == Inv(Add(X, Y))

    def test_postfix_stacks(self):
        assert parse_term("x^-1^-1") == Inv(Inv(X))

    def test_unary_minus_binds_tighter_than_mul_argument(self):
        assert parse_term("-x*y") == Mul(Neg(X), Y)
        assert parse_term("x*-y") == Mul(X, Neg(Y))

    def test_variable_names(self):
        assert parse_term("ab_3") == Var("ab_3")

    @pytest.mark.parametrize(
        "bad", ["x +", "X", "(x", "x)", "x ^- 1", "1 2", "inv x", "?", "x=y"]
    )
    def test_malformed_inputs_raise_with_position(self, bad):
        with pytest.raises(ParseError) as err:
            parse_term(bad)
        assert err.value.position >= 0

    def test_error_position_points_at_fault(self):
        with pytest.raises(ParseError) as err:
            parse_term("x+*y")
        assert err.value.position == 2


class TestNumeral:
    def test_zero(self):
        assert numeral(0) == ZERO

    def test_one_unfolding(self):
        assert numeral(1) == Add(ZERO, ONE)

    def test_two_unfoldings(self):
        assert numeral(2) == Add(Add(ZERO, ONE), ONE)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            numeral(-1)


class TestSubstitute:
    def test_instantiating_a_scheme(self):
        two = numeral(2)
        assert substitute(Mul(X, Inv(X)), {"x": two}) == Mul(two, Inv(two))

    def test_unbound_variable_fixed(self):
        assert substitute(Y, {"x": ONE}) == Y

    def test_no_capture_possible(self):
        assert substitute(Inv(X), {"x": Inv(X)}) == Inv(Inv(X))

    @given(terms, terms)
    def test_size_bound(self, t, image):
        result = substitute(t, {"x": image})
        assert term_size(result) <= term_size(t) * max(term_size(image), 1)


class TestFreeVars:
    def test_closed(self):
        assert free_vars(ZERO) == set()

    def test_single(self):
        assert free_vars(Mul(X, Inv(X))) == {"x"}

    def test_pair(self):
        assert free_vars(Add(X, Y)) == {"x", "y"}


class TestPrint:
    def test_emits_postfix_inverse(self):
        assert print_term(Inv(X)) == "x^-1"

    def test_restricted_inverse_round_trip_text(self):
        assert print_term(Mul(X, Mul(X, Inv(X)))) == "x*(x*x^-1)"

    def test_subtraction_sugar(self):
        assert print_term(Add(X, Neg(Y))) == "x-y"

    def test_numeral_text(self):
        assert print_term(numeral(2)) == "0+1+1"

    def test_parenthesizes_negated_product_under_inverse(self):
        t = Inv(Neg(Mul(X, Y)))
        assert print_term(t) == "(-(x*y))^-1"
        assert parse_term(print_term(t)) == t

    @given(terms)
    def test_round_trip(self, t):
        assert parse_term(print_term(t)) == t
