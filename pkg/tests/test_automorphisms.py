import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import expressions, words
from mccool.automorphisms import (
    Chi,
    Endomorphism,
    ExpressionError,
    Sigma,
    Tau,
    Theta,
    Xi,
    apply,
    commutator_expression,
    compose,
    equal,
    evaluate,
    format_expression,
    generator_endomorphism,
    invert_expression,
    is_identity,
    parse_expression,
    permutation_endomorphism,
)
from mccool.words import Word, parse_word


def images(f):
    return f.format()


def ev(text, n):
    return evaluate(parse_expression(text, n))


def test_chi_images():
    assert images(generator_endomorphism(Chi(2, 1), 1, 3)) == ["x1", "X1 x2 x1", "x3"]
    assert images(generator_endomorphism(Chi(2, 1), -1, 2)) == ["x1", "x1 x2 X1"]


def test_theta_images():
    assert images(generator_endomorphism(Theta(1, 2, 3), 1, 3)) == ["x1 X2 X3 x2 x3", "x2", "x3"]
    assert images(ev("th[1;2,3]", 3))[0] == "x1 X2 X3 x2 x3"


def test_apply_by_hand():
    # chi_{2,1}: x2 -> X1 x2 x1, so x2 x1 -> X1 x2 x1 x1
    f = generator_endomorphism(Chi(2, 1), 1, 3)
    assert apply(f, parse_word("x2 x1", 3)) == parse_word("X1 x2 x1 x1", 3)
    assert apply(f, parse_word("x3", 3)) == parse_word("x3", 3)
    # inverse letters use inverted images: X2 -> X1 X2 x1
    assert apply(f, parse_word("X2", 3)) == parse_word("X1 X2 x1", 3)
    assert apply(Endomorphism.identity(3), parse_word("x1 X3", 3)) == parse_word("x1 X3", 3)


def test_compose_examples():
    c = generator_endomorphism(Chi(2, 1), 1, 2)
    assert equal(compose(c, Endomorphism.identity(2)), c)
    assert is_identity(compose(c, generator_endomorphism(Chi(2, 1), -1, 2)))
    xi, sigma = generator_endomorphism(Xi(1), 1, 2), generator_endomorphism(Sigma(1), 1, 2)
    assert equal(compose(xi, sigma), c)
    assert not equal(compose(sigma, xi), c)


def test_evaluate_examples():
    assert is_identity(ev("c[2,1] * c[2,1]^-1", 2))
    assert equal(ev("c[1,2] c[3,2] c[1,3]", 3), ev("c[1,3] c[1,2] c[3,2]", 3))
    assert is_identity(evaluate(parse_expression("", 3)))


def test_equal_examples():
    assert equal(Endomorphism.identity(2), Endomorphism.identity(2))
    assert not equal(ev("c[2,1]", 2), ev("c[2,1]^-1", 2))
    a = parse_expression("c[1,2] c[3,2]", 3)
    b = parse_expression("c[1,3]", 3)
    assert is_identity(evaluate(commutator_expression(a, b)))


def test_invert_expression_examples():
    e = parse_expression("c[2,1] * xi[1]", 2)
    assert format_expression(invert_expression(e)) == "xi[1]^-1 * c[2,1]^-1"
    assert len(invert_expression(parse_expression("", 2))) == 0
    e = parse_expression("c[3,2] * tau[1]", 3)
    assert is_identity(evaluate(e * invert_expression(e)))


def test_parse_expression_round_trip_and_errors():
    text = "c[3,2]^-1 * c[2,1] * xi[1]"
    assert format_expression(parse_expression(text, 3)) == text
    assert format_expression(parse_expression("delta s[1]^-1 th[3;1,2]", 3)) == "delta * s[1]^-1 * th[3;1,2]"
    for bad in ("c[3,3]", "c[4,1]", "xi[3]", "th[1;3,2]", "q[1]", "c[2,1]^2", "c[2,1]x"):
        with pytest.raises(ExpressionError):
            parse_expression(bad, 3)


def test_free_reduce_is_explicit():
    e = parse_expression("c[2,1] c[2,1]^-1 xi[1]", 2)
    assert len(e) == 3
    assert format_expression(e.free_reduce()) == "xi[1]"


def test_permutation_endomorphism():
    f = permutation_endomorphism((2, 3, 1))
    assert images(f) == ["x2", "x3", "x1"]


def test_rank_mismatch():
    with pytest.raises(ValueError):
        compose(Endomorphism.identity(2), Endomorphism.identity(3))


@given(expressions(3))
def test_inverse_expression_evaluates_to_inverse(e):
    assert is_identity(compose(evaluate(invert_expression(e)), evaluate(e)))
    assert is_identity(compose(evaluate(e), evaluate(invert_expression(e))))


@given(expressions(3), expressions(3), words(3, 8))
def test_apply_compose(a, b, w):
    f, g = evaluate(a), evaluate(b)
    assert apply(compose(f, g), w) == apply(f, apply(g, w))


@given(expressions(3, 4), expressions(3, 4))
def test_evaluate_is_homomorphism(a, b):
    assert equal(evaluate(a * b), compose(evaluate(a), evaluate(b)))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_involutions_and_factorization(n):
    for i in range(1, n):
        xi = generator_endomorphism(Xi(i), 1, n)
        assert is_identity(compose(xi, xi))
        sigma = generator_endomorphism(Sigma(i), 1, n)
        assert equal(compose(xi, sigma), generator_endomorphism(Chi(i + 1, i), 1, n))
    for i in range(1, n + 1):
        tau = generator_endomorphism(Tau(i), 1, n)
        assert is_identity(compose(tau, tau))


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), words(n, 10))))
def test_identity_fixes_words(nw):
    n, w = nw
    assert apply(Endomorphism.identity(n), w) == w
    assert apply(Endomorphism.identity(n), Word.identity(n)).is_identity()
