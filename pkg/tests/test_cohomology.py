import random
from itertools import combinations, product

import pytest

from mccool import cohomology as coh
from mccool.cohomology import CohomologyClass, CohomologyError, basis, multiply, normalize


def mono(text, n=3):
    return coh.parse_monomial(text, n)


def cls(text, n=3):
    return normalize(n, mono(text, n))


def test_normalize_examples():
    assert str(cls("d[3,2]*d[3,1]")) == "-d[2,1]*d[3,2]"
    assert cls("d[2,1]*d[2,1]").is_zero()
    assert str(cls("d[2,1]*d[3,2]")) == "d[2,1]*d[3,2]"


def test_multiply_examples():
    assert str(multiply(cls("d[3,1]"), cls("d[3,2]"))) == "d[2,1]*d[3,2]"
    a = cls("d[3,1]")
    assert multiply(a, CohomologyClass.unit(3)) == a
    assert multiply(cls("d[2,1]"), multiply(cls("d[3,1]"), cls("d[3,2]"))).is_zero()


def test_basis_examples():
    assert basis(3, 2) == [((2, 1), (3, 1)), ((2, 1), (3, 2))]
    assert basis(3, 1) == [((2, 1),), ((3, 1),), ((3, 2),)]
    assert basis(5, 0) == [()]
    assert basis(3, 3) == []


def test_poincare_examples():
    assert tuple(coh.poincare_polynomial(3)) == (1, 3, 2)
    assert tuple(coh.poincare_polynomial(4)) == (1, 6, 11, 6)
    assert tuple(coh.poincare_polynomial(2)) == (1, 1)


def test_oracle_examples():
    assert coh.oracle_reduce(3, 3) == {0: 1, 1: 3, 2: 2, 3: 0}
    assert coh.oracle_reduce(2, 1) == {0: 1, 1: 1}
    assert coh.oracle_reduce(4, 2)[2] == 11


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_matches_basis_and_is_torsion_free(n):
    ranks = coh.oracle_reduce(n, 3)
    assert all(ranks[k] == len(basis(n, k)) for k in range(4))
    assert coh.oracle_torsion_free(n, 3)


def elementary_symmetric(values, k):
    """Oracle for prod (1 + k t): coefficient of t^k."""
    total = 0
    for combo in combinations(values, k):
        p = 1
        for v in combo:
            p *= v
        total += p
    return total


@pytest.mark.parametrize("n", range(2, 8))
def test_basis_counts(n):
    for k in range(n):
        assert len(basis(n, k)) == elementary_symmetric(range(1, n), k)


@pytest.mark.parametrize("n", range(2, 7))
def test_relations_normalize_to_zero(n):
    for i in range(2, n + 1):
        for k in range(1, i):
            assert normalize(n, [(i, k), (i, k)]).is_zero()
            for j in range(k + 1, i):
                rel = normalize(n, [(i, j), (i, k)]) - normalize(n, [(i, j), (j, k)])
                assert rel.is_zero()


def gens(n):
    return [(i, j) for i in range(2, n + 1) for j in range(1, i)]


def test_confluence_under_random_schedules():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(2, 5)
        factors = [rng.choice(gens(n)) for _ in range(rng.randint(1, 4))]
        assert coh.reduce_randomly(factors, 1, rng) == normalize(n, factors).as_dict()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_graded_commutative_and_associative(n):
    rng = random.Random(n)
    for _ in range(100):
        a, b, z = (normalize(n, [rng.choice(gens(n)) for _ in range(rng.randint(0, 2))])
                   for _ in range(3))
        sign = -1 if a.degree * b.degree % 2 else 1
        ab, ba = multiply(a, b), multiply(b, a)
        assert ab == (ba if sign == 1 else -ba)
        assert multiply(multiply(a, b), z) == multiply(a, multiply(b, z))


def test_normal_forms_are_admissible():
    for n in (3, 4, 5):
        for factors in product(gens(n), repeat=3):
            for m, _ in normalize(n, factors).terms:
                assert coh.is_admissible(m)


def test_text_format_round_trip():
    for m in basis(4, 2):
        assert coh.parse_monomial(coh.format_monomial(m), 4) == m
    assert coh.parse_monomial("1", 4) == ()
    assert coh.format_class(normalize(3, [])) == "1"


@pytest.mark.parametrize("bad", ["d[1,2]", "d[4,1]", "d[3,1]*x", "d[2,2]"])
def test_parse_errors(bad):
    with pytest.raises(CohomologyError):
        coh.parse_monomial(bad, 3)


def test_mixed_ranks_rejected():
    with pytest.raises(CohomologyError):
        multiply(cls("d[2,1]", 3), cls("d[2,1]", 4))
