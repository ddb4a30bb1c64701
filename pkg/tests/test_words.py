import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import raw_letters, words
from mccool.words import (
    Letter,
    Word,
    WordError,
    commutator,
    format_word,
    invert,
    multiply,
    parse_word,
    peel_conjugate,
    reduce,
)


def naive_reduce(xs):
    """Oracle: delete the first adjacent cancelling pair until none remains."""
    xs = list(xs)
    changed = True
    while changed:
        changed = False
        for p in range(len(xs) - 1):
            if xs[p] == -xs[p + 1]:
                del xs[p:p + 2]
                changed = True
                break
    return tuple(xs)


def w(text, rank=3):
    return parse_word(text, rank)


@pytest.mark.parametrize("raw, expected", [
    ([1, -1, 2], (2,)),
    ([], ()),
    ([1, 2, -2, -1, 3], (3,)),
])
def test_reduce_examples(raw, expected):
    assert reduce(raw, 3).letters == expected


def test_reduce_accepts_letters():
    assert reduce([Letter(1, 1), Letter(1, -1), Letter(2, -1)], 2).letters == (-2,)


def test_multiply_examples():
    assert multiply(w("x1 x2"), w("X2 x3")) == w("x1 x3")
    assert multiply(w("x1 X3"), Word.identity(3)) == w("x1 X3")
    assert multiply(w("x1"), w("X1")).is_identity()


def test_invert_examples():
    assert invert(w("x1 x2")) == w("X2 X1")
    assert invert(Word.identity(3)).is_identity()
    assert invert(w("X3")) == w("x3")


def test_commutator_examples():
    assert commutator(w("x1"), w("x2")) == w("X1 X2 x1 x2")
    assert commutator(w("x1"), w("x1")).is_identity()
    assert commutator(w("x1 x2"), w("x1 x2")).is_identity()


def test_peel_examples():
    p = peel_conjugate(w("X2 x1 x2", 2))
    assert (p.conjugator, p.index, p.sign) == (w("x2", 2), 1, 1)
    p = peel_conjugate(w("x1", 2))
    assert (p.conjugator, p.index, p.sign) == (Word.identity(2), 1, 1)
    assert peel_conjugate(w("x1 x2", 2)) is None
    assert peel_conjugate(Word.identity(2)) is None


def test_parse_format_examples():
    assert w("x1 X2").letters == (1, -2)
    assert w("").is_identity()
    assert format_word(reduce([1, -1], 1)) == ""
    assert w("x1*x2 * X3").letters == (1, 2, -3)


@pytest.mark.parametrize("bad", ["x0", "y1", "x4", "x1 x", "x-1"])
def test_parse_errors(bad):
    with pytest.raises(WordError):
        parse_word(bad, 3)


def test_parse_error_reports_position():
    with pytest.raises(WordError, match="position 3"):
        parse_word("x1 q2", 3)


def test_rank_mismatch_is_an_error():
    with pytest.raises(WordError):
        multiply(Word(2, (1,)), Word(3, (1,)))
    with pytest.raises(WordError):
        Word(2, (3,))


def test_embed_raises_rank_only():
    a = Word(2, (1, -2))
    assert a.embed(4) == Word(4, (1, -2))
    with pytest.raises(WordError):
        a.embed(1)


@given(raw_letters(4, 30))
def test_reduce_matches_naive_oracle(xs):
    assert reduce(xs, 4).letters == naive_reduce(xs)


@given(raw_letters(4, 30))
def test_reduce_idempotent(xs):
    once = reduce(xs, 4)
    assert reduce(once.letters, 4) == once


@given(words(3), words(3), words(3))
def test_multiply_associative_with_identity(a, b, c):
    e = Word.identity(3)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a


@given(words(3))
def test_invert_involution(a):
    assert invert(invert(a)) == a
    assert (a * invert(a)).is_identity()


@given(words(4), st.integers(1, 4), st.sampled_from((1, -1)))
def test_peel_reassembles(u, j, sign):
    target = invert(u) * Word.generator(4, j, sign) * u
    p = peel_conjugate(target)
    assert p is not None
    assert (p.index, p.sign) == (j, sign)
    assert invert(p.conjugator) * Word.generator(4, p.index, p.sign) * p.conjugator == target
    # the peel is maximal, so the conjugator is never longer than u
    assert len(p.conjugator) <= len(u)


@given(words(4))
def test_parse_format_round_trip(a):
    assert parse_word(format_word(a), 4) == a
