"""Permutation-conjugacy automorphisms and the splitting BP_n = PSigma_n x| S_n.

An automorphism f has permutation-conjugacy type if f(x_i) = w_i^-1 x_{l(i)} w_i
for a permutation l.  With the permutation automorphism P_l(x_i) = x_{l(i)},
every such f factors as f = pure o P_l with pure in PSigma_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automorphisms import (
    Endomorphism,
    ExpressionError,
    GroupExpression,
    Sigma,
    Xi,
    compose,
    permutation_endomorphism,
)
from .words import Word, peel_conjugate


class NotPermutationConjugacy(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """A bijection of 1..n in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(a) for a in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self after other."""
        return Permutation(tuple(self(other(i)) for i in range(1, other.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, a in enumerate(self.images, start=1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def endomorphism(self) -> Endomorphism:
        return permutation_endomorphism(self.images)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


@dataclass(frozen=True)
class PermConjData:
    permutation: Permutation
    conjugators: tuple[Word, ...]

    def reassemble(self) -> Endomorphism:
        n = self.permutation.n
        images = []
        for i, w in enumerate(self.conjugators, start=1):
            images.append(~w * Word.generator(n, self.permutation(i)) * w)
        return Endomorphism(n, tuple(images))


def detect(f: Endomorphism) -> PermConjData:
    perm, conj = [], []
    for i, img in enumerate(f.images, start=1):
        peeled = peel_conjugate(img)
        if peeled is None:
            raise NotPermutationConjugacy(f"image of x{i} is not a conjugate of a generator")
        if peeled.sign != 1:
            raise NotPermutationConjugacy(f"image of x{i} is a conjugate of an inverse generator")
        perm.append(peeled.index)
        conj.append(peeled.conjugator)
    if sorted(perm) != list(range(1, f.rank + 1)):
        raise NotPermutationConjugacy(f"generator targets {perm} do not form a permutation")
    return PermConjData(Permutation(tuple(perm)), tuple(conj))


def split(f: Endomorphism) -> tuple[Endomorphism, Permutation]:
    """Return (pure, l) with f = pure o P_l and pure basis-conjugating."""
    lam = detect(f).permutation
    pure = compose(f, lam.inverse().endomorphism())
    return pure, lam


def is_basis_conjugating(f: Endomorphism) -> bool:
    """Every x_i goes to a conjugate of x_i itself."""
    for i, img in enumerate(f.images, start=1):
        peeled = peel_conjugate(img)
        if peeled is None or peeled.index != i or peeled.sign != 1:
            return False
    return True


def rho(e: GroupExpression) -> Permutation:
    """The underlying permutation of a word in xi and sigma generators."""
    n = e.rank
    out = Permutation.identity(n)
    for g, _ in e.factors:
        if not isinstance(g, (Xi, Sigma)):
            raise ExpressionError(f"{g} is not a braid-permutation generator")
        out = out * Permutation.transposition(n, g.i, g.i + 1)
    return out


def pure_conjugators(pure: Endomorphism) -> list[Word]:
    return [peel_conjugate(img).conjugator for img in pure.images]


def one_line(p: Permutation | Sequence[int]) -> str:
    return str(p if isinstance(p, Permutation) else Permutation(tuple(p)))
