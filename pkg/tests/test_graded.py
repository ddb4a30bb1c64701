import random
from itertools import permutations

import pytest

from mccool.freelie import LieElement, bracket
from mccool.graded import (
    ModelElement,
    build_ideal,
    full_element,
    model_bracket,
    model_rank,
    model_ranks,
    nonvanishing_witness,
    plus_relation_triples,
    quotient_ranks,
    relation_elements,
)
from mccool.series import TruncatedSeries, closed_form_series, uea_series


def c(n, k, j):
    return ModelElement.chi(n, k, j)


def multiset_count(ranks, D):
    """Oracle for PBW: count multisets of graded basis elements by total degree (knapsack)."""
    ways = [1] + [0] * D
    for d, r in ranks.items():
        for _ in range(r):
            for t in range(d, D + 1):
                ways[t] += ways[t - d]
    return tuple(ways)


def test_model_rank_examples():
    assert [model_rank(3, d) for d in range(1, 6)] == [3, 1, 2, 3, 6]
    assert [model_rank(4, d) for d in range(1, 5)] == [6, 4, 10, 21]
    assert model_ranks(2, 4) == {1: 1, 2: 0, 3: 0, 4: 0}


def test_model_bracket_examples():
    row3 = lambda a: LieElement.generator(2, a)  # noqa: E731
    assert model_bracket(c(3, 2, 1), c(3, 3, 2)) == ModelElement(3, {3: -bracket(row3(1), row3(2))})
    assert not model_bracket(c(3, 2, 1), c(3, 3, 1))
    assert not model_bracket(c(4, 2, 1), c(4, 4, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_relation_families_vanish_in_model(n):
    families = set()
    for family, idx, value in plus_relation_triples(n):
        assert not value, (family, idx)
        families.add(family)
    if n >= 4:
        assert families == {"disjoint", "common-conjugator", "triangle"}


def random_model_element(rng, n, degree):
    gens = [(k, j) for k in range(2, n + 1) for j in range(1, k)]
    total = ModelElement(n)
    for _ in range(3):
        e = c(n, *rng.choice(gens))
        for _ in range(degree - 1):
            g = c(n, *rng.choice(gens))
            e = model_bracket(e, g) if rng.random() < 0.5 else model_bracket(g, e)
        total = total + rng.randint(-2, 2) * e
    return total


@pytest.mark.parametrize("n", [3, 4, 5])
def test_model_jacobi_and_antisymmetry(n):
    rng = random.Random(n)
    nontrivial = 0
    for _ in range(80):
        da, db, dc = rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 2)
        a = random_model_element(rng, n, da)
        b = random_model_element(rng, n, db)
        z = random_model_element(rng, n, dc)
        assert model_bracket(a, b) == -model_bracket(b, a)
        terms = (model_bracket(a, model_bracket(b, z)), model_bracket(b, model_bracket(z, a)),
                 model_bracket(z, model_bracket(a, b)))
        nontrivial += any(terms)
        assert not (terms[0] + terms[1] + terms[2])
    assert nontrivial >= 10


def test_quotient_examples():
    assert quotient_ranks(3, "plus", 3) == {1: 3, 2: 1, 3: 2}
    assert quotient_ranks(2, "plus", 2) == {1: 1, 2: 0}
    assert quotient_ranks(3, "full", 1) == {1: 6}


@pytest.mark.parametrize("n, D", [(2, 5), (3, 5), (4, 5)])
def test_oracle_agreement(n, D):
    assert quotient_ranks(n, "plus", D) == model_ranks(n, D)


def test_plus_relations_respect_side_conditions():
    for family, idx, _ in relation_elements(5, "plus"):
        if family == "triangle":
            i, k, j = idx
            assert j < k < i


@pytest.mark.parametrize("n", [3, 4])
def test_full_variant(n):
    ideal = build_ideal(n, "full", 2)
    assert ideal.rank(1) == n * (n - 1)
    for _, _, r in relation_elements(n, "full"):
        assert ideal.is_zero(r)
    for i, j, k in permutations(range(1, n + 1), 3):
        assert nonvanishing_witness(n, i, j, k, ideal)


def test_relation_two_element_is_zero_class():
    ideal = build_ideal(3, "full", 2)
    # [chi_{3,1}, chi_{3,2} + chi_{1,2}]
    r = full_element(3, [(1, (3, 1), ((3, 2), (1, 2)))])
    assert r and ideal.is_zero(r)


def test_witness_rejects_repeated_indices():
    with pytest.raises(ValueError):
        nonvanishing_witness(3, 1, 1, 2)


def test_series_examples():
    assert tuple(uea_series(model_ranks(3, 4), 4)) == (1, 3, 7, 15, 31)
    assert tuple(uea_series({}, 4)) == (1, 0, 0, 0, 0)
    assert tuple(uea_series({1: 1}, 5)) == (1, 1, 1, 1, 1, 1)
    assert tuple(closed_form_series(3, 4)) == (1, 3, 7, 15, 31)
    assert tuple(closed_form_series(2, 3)) == (1, 1, 1, 1)
    assert tuple(closed_form_series(4, 2)) == (1, 6, 25)


def test_closed_form_n3_is_mersenne():
    s = closed_form_series(3, 12)
    assert tuple(s) == tuple(2 ** (m + 1) - 1 for m in range(13))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_series_agreement(n):
    ranks = model_ranks(n, 8)
    assert uea_series(ranks, 8) == closed_form_series(n, 8)
    assert tuple(uea_series(ranks, 8)) == multiset_count(ranks, 8)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_koszul_duality_with_cohomology(n):
    from mccool.cohomology import poincare_polynomial
    D = 8
    p = poincare_polynomial(n).substitute_negative()
    prod = TruncatedSeries(tuple(p[m] if m <= p.degree else 0 for m in range(D + 1))) * closed_form_series(n, D)
    assert tuple(prod) == (1,) + (0,) * D
