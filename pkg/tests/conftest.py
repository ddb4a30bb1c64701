import hypothesis.strategies as st
from hypothesis import settings

from mccool.automorphisms import Chi, Delta, GroupExpression, Sigma, Tau, Theta, Xi
from mccool.words import Word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def raw_letters(rank, max_size=16):
    return st.lists(
        st.integers(1, rank).flatmap(lambda i: st.sampled_from((i, -i))),
        max_size=max_size,
    )


def words(rank, max_size=16):
    return raw_letters(rank, max_size).map(lambda xs: Word(rank, tuple(xs)))


def generators(n):
    """Every named automorphism generator valid at rank n."""
    gens = [Chi(k, i) for k in range(1, n + 1) for i in range(1, n + 1) if k != i]
    gens += [Theta(k, s, t) for k in range(1, n + 1) for s in range(1, n + 1)
             for t in range(s + 1, n + 1) if k not in (s, t)]
    gens += [Xi(i) for i in range(1, n)] + [Sigma(i) for i in range(1, n)]
    gens += [Tau(i) for i in range(1, n + 1)]
    if n >= 2:
        gens.append(Delta())
    return gens


@st.composite
def expressions(draw, n, max_size=8):
    factors = draw(st.lists(
        st.tuples(st.sampled_from(generators(n)), st.sampled_from((1, -1))), max_size=max_size))
    return GroupExpression(n, tuple(factors))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number].line())
