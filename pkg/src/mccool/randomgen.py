"""Seeded random inputs for property checks."""

from __future__ import annotations

import random
from typing import Literal

from .automorphisms import Chi, GroupExpression, Sigma, Xi
from .words import Word


def random_word(rng: random.Random, rank: int, max_length: int) -> Word:
    """A uniformly chosen reduced word of length 0..max_length (rank >= 1)."""
    length = rng.randint(0, max_length)
    letters: list[int] = []
    while len(letters) < length:
        a = rng.choice((1, -1)) * rng.randint(1, rank)
        if letters and letters[-1] == -a:
            continue
        letters.append(a)
    return Word(rank, tuple(letters))


def random_chi_expression(
    rng: random.Random, n: int, max_length: int, variant: Literal["full", "plus"] = "full"
) -> GroupExpression:
    if variant == "plus":
        gens = [(k, i) for k in range(2, n + 1) for i in range(1, k)]
    else:
        gens = [(k, i) for k in range(1, n + 1) for i in range(1, n + 1) if k != i]
    factors = []
    if gens:
        for _ in range(rng.randint(0, max_length)):
            k, i = rng.choice(gens)
            factors.append((Chi(k, i), rng.choice((1, -1))))
    return GroupExpression(n, tuple(factors))


def random_kernel_expression(rng: random.Random, n: int, max_length: int) -> GroupExpression:
    """Word in the generators chi_{n,i}, chi_{i,n} of K_n."""
    gens = [Chi(n, i) for i in range(1, n)] + [Chi(i, n) for i in range(1, n)]
    length = rng.randint(0, max_length)
    return GroupExpression(n, tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(length)))


def random_bp_expression(rng: random.Random, n: int, max_length: int) -> GroupExpression:
    gens = [Xi(i) for i in range(1, n)] + [Sigma(i) for i in range(1, n)]
    length = rng.randint(0, max_length)
    return GroupExpression(n, tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(length)))


def untangling_xis(perm_images: tuple[int, ...]) -> GroupExpression:
    """A xi-word whose permutation is the inverse of ``perm_images`` (bubble sort)."""
    n = len(perm_images)
    p = list(perm_images)
    factors = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                factors.append((Xi(i + 1), 1))
                changed = True
    return GroupExpression(n, tuple(factors))
