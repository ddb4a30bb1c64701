"""The split projection PSigma_n -> PSigma_{n-1} and its kernel.

Expressions at level n are words in the chi generators of rank n.  The
``plus`` variant only admits chi_{k,i} with i < k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .automorphisms import (
    Chi,
    Endomorphism,
    ExpressionError,
    GroupExpression,
    evaluate,
    invert_expression,
    is_identity,
)
from .words import Word, peel_conjugate

Variant = Literal["full", "plus"]


class NotInKernel(ValueError):
    """The endomorphism is not of the shape required for K_n^+."""


@dataclass(frozen=True)
class TowerLevel:
    n: int
    variant: Variant = "full"

    def __post_init__(self):
        if self.variant not in ("full", "plus"):
            raise ValueError(f"unknown variant {self.variant!r}")

    def check(self, e: GroupExpression) -> None:
        if e.rank != self.n:
            raise ExpressionError(f"expression has rank {e.rank}, level is {self.n}")
        for g, _ in e.factors:
            if not isinstance(g, Chi):
                raise ExpressionError(f"{g} is not a chi generator")
            if self.variant == "plus" and not g.i < g.k:
                raise ExpressionError(f"{g} is not in the upper triangular group")


@dataclass(frozen=True)
class Decomposition:
    w_head: GroupExpression
    x_tail: GroupExpression


def project(e: GroupExpression, variant: Variant = "full") -> GroupExpression:
    """Delete every factor that mentions index n."""
    n = e.rank
    if n < 2:
        raise ValueError("projection needs n >= 2")
    TowerLevel(n, variant).check(e)
    kept = tuple((g, x) for g, x in e.factors if n not in (g.k, g.i))
    return GroupExpression(n - 1, kept)


def lift(e: GroupExpression, variant: Variant = "full") -> GroupExpression:
    """The canonical section: same factors, one rank higher."""
    TowerLevel(e.rank, variant).check(e)
    return e.at_rank(e.rank + 1)


def in_kernel(e: GroupExpression, variant: Variant = "full") -> bool:
    return is_identity(evaluate(project(e, variant)))


def decompose(e: GroupExpression, variant: Variant = "full") -> Decomposition:
    """Split e as (section image) * (kernel element)."""
    head = lift(project(e, variant), variant)
    tail = (invert_expression(head) * e).free_reduce()
    return Decomposition(head, tail)


def phi(w: Word) -> GroupExpression:
    """x_i^{+-1} -> chi_{n,i}^{+-1}, where n = rank(w) + 1."""
    n = w.rank + 1
    return GroupExpression(n, tuple((Chi(n, abs(a)), 1 if a > 0 else -1) for a in w.letters))


def retract_plus(f: Endomorphism) -> Word:
    """Recover W from f = evaluate(phi(W)).

    Such an f fixes x_1..x_{n-1} and sends x_n to W^-1 x_n W with W free of
    x_n; anything else raises :class:`NotInKernel`.
    """
    n = f.rank
    if n < 2:
        raise NotInKernel("rank must be at least 2")
    for i in range(1, n):
        if f.image(i).letters != (i,):
            raise NotInKernel(f"x{i} is not fixed")
    peeled = peel_conjugate(f.image(n))
    if peeled is None or peeled.index != n or peeled.sign != 1:
        raise NotInKernel(f"image of x{n} is not a conjugate of x{n}")
    u = peeled.conjugator
    if n in map(abs, u.letters):
        raise NotInKernel(f"conjugator involves x{n}")
    return Word(n - 1, u.letters)


def kernel_word(x_tail: GroupExpression) -> GroupExpression:
    """Rewrite a K_n^+ element as a word in the free generators chi_{n,i}."""
    return phi(retract_plus(evaluate(x_tail)))


def gamma(e: GroupExpression) -> tuple[int, ...]:
    """Exponent sums of the chi_{i,n} factors of a K_n generator word."""
    n = e.rank
    out = [0] * (n - 1)
    for g, x in e.factors:
        if not isinstance(g, Chi) or n not in (g.k, g.i):
            raise ExpressionError(f"{g} is not a kernel generator at level {n}")
        if g.i == n:
            out[g.k - 1] += x
    return tuple(out)
