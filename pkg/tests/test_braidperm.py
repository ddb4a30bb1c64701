import random

import pytest

from mccool.automorphisms import (
    compose,
    equal,
    evaluate,
    generator_endomorphism,
    Chi,
    is_identity,
    parse_expression,
)
from mccool.braidperm import (
    NotPermutationConjugacy,
    Permutation,
    detect,
    is_basis_conjugating,
    rho,
    split,
)
from mccool.randomgen import random_bp_expression, random_chi_expression, untangling_xis
from mccool.words import Word, parse_word


def ev(text, n):
    return evaluate(parse_expression(text, n))


def test_detect_examples():
    f = ev("s[1]", 2)
    assert f.format() == ["x2", "X2 x1 x2"]
    data = detect(f)
    assert data.permutation == Permutation((2, 1))
    assert data.conjugators == (Word.identity(2), parse_word("x2", 2))
    data = detect(ev("c[2,1]", 2))
    assert data.permutation.is_identity()
    assert data.conjugators == (Word.identity(2), parse_word("x1", 2))
    with pytest.raises(NotPermutationConjugacy):
        detect(ev("tau[1]", 2))
    with pytest.raises(NotPermutationConjugacy):
        detect(ev("delta", 2))


def test_split_examples():
    pure, lam = split(ev("s[1]", 2))
    assert equal(pure, ev("c[1,2]", 2)) and lam == Permutation((2, 1))
    assert equal(compose(ev("c[1,2]", 2), ev("xi[1]", 2)), ev("s[1]", 2))
    f = ev("c[2,1] c[3,1]^-1 c[1,3]", 3)
    pure, lam = split(f)
    assert equal(pure, f) and lam.is_identity()
    pure, lam = split(ev("xi[1]", 2))
    assert is_identity(pure) and lam == Permutation((2, 1))


def test_rho_examples():
    assert rho(parse_expression("s[1] xi[2]", 3)) == Permutation.transposition(3, 1, 2) * Permutation.transposition(3, 2, 3)
    assert rho(parse_expression("s[1] xi[2]", 3)).images == (2, 3, 1)
    assert rho(parse_expression("xi[1] xi[1]", 2)).is_identity()
    assert rho(parse_expression("", 4)).is_identity()


def test_rho_agrees_with_evaluated_permutation():
    # rho must use the same composition order as evaluate
    e = parse_expression("xi[1] xi[2]", 3)
    assert detect(evaluate(e)).permutation == rho(e)


def test_permutation_algebra():
    p = Permutation((2, 3, 1))
    assert (p * p.inverse()).is_identity()
    assert str(p) == "2 3 1"
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_rho_rejects_other_generators():
    with pytest.raises(ValueError):
        rho(parse_expression("c[2,1]", 2))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_exactness_at_the_middle(n):
    rng = random.Random(n)
    seen_identity = 0
    for t in range(80):
        e = random_bp_expression(rng, n, 10)
        if t % 2:
            e = e * untangling_xis(rho(e).images)
        f = evaluate(e)
        data = detect(f)
        pure, lam = split(f)
        assert data.permutation == lam == rho(e)
        assert equal(compose(pure, lam.endomorphism()), f)
        assert equal(data.reassemble(), f)
        assert is_basis_conjugating(pure)
        if lam.is_identity():
            seen_identity += 1
            assert equal(pure, f)
    assert seen_identity >= 40


@pytest.mark.parametrize("n", [3, 4])
def test_split_on_mixed_expressions(n):
    rng = random.Random(10 + n)
    for _ in range(40):
        e = random_bp_expression(rng, n, 6) * random_chi_expression(rng, n, 6) * random_bp_expression(rng, n, 6)
        f = evaluate(e)
        pure, lam = split(f)
        assert equal(compose(pure, lam.endomorphism()), f)
        assert is_basis_conjugating(pure)


def test_factorization_left_form():
    for n in (2, 3, 4):
        for i in range(1, n):
            assert equal(compose(ev(f"xi[{i}]", n), ev(f"s[{i}]", n)),
                         generator_endomorphism(Chi(i + 1, i), 1, n))
