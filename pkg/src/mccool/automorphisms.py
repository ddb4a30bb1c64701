"""Endomorphisms of F_n given by generator images, and the named automorphisms.

Everything acts on the left: ``compose(f, g)`` is x -> f(g(x)), and a formal
expression ``a * b`` evaluates to ``compose(a, b)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce as _fold
from typing import Iterable, Sequence, Union

from .words import Word, WordError, commutator, format_word, invert


class ExpressionError(ValueError):
    """Invalid generator indices or unparsable expression text."""


# ---------------------------------------------------------------------------
# endomorphisms


@dataclass(frozen=True)
class Endomorphism:
    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != self.rank:
            raise WordError(f"expected {self.rank} images, got {len(images)}")
        for w in images:
            if w.rank != self.rank:
                raise WordError(f"image of rank {w.rank} in rank {self.rank} endomorphism")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(rank, tuple(Word.generator(rank, i) for i in range(1, rank + 1)))

    @classmethod
    def from_images(cls, rank: int, images: dict[int, Word] | Sequence[Word]) -> "Endomorphism":
        """Build from a full image list or a sparse ``{index: image}`` dict."""
        if isinstance(images, dict):
            full = [images.get(i, Word.generator(rank, i)) for i in range(1, rank + 1)]
            return cls(rank, tuple(full))
        return cls(rank, tuple(images))

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __matmul__(self, other: "Endomorphism") -> "Endomorphism":
        return compose(self, other)

    def image(self, i: int) -> Word:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return is_identity(self)

    def format(self) -> list[str]:
        return [format_word(w) for w in self.images]


def _check(f: Endomorphism, rank: int) -> None:
    if f.rank != rank:
        raise WordError(f"rank mismatch: {f.rank} != {rank}")


def apply(f: Endomorphism, w: Word) -> Word:
    _check(f, w.rank)
    out: list[int] = []
    for a in w.letters:
        img = f.images[abs(a) - 1].letters
        out.extend(img if a > 0 else (-x for x in reversed(img)))
    return Word(f.rank, tuple(out))


def compose(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """f after g."""
    _check(f, g.rank)
    return Endomorphism(f.rank, tuple(apply(f, w) for w in g.images))


def equal(f: Endomorphism, g: Endomorphism) -> bool:
    _check(f, g.rank)
    return f.images == g.images


def is_identity(f: Endomorphism) -> bool:
    return all(w.letters == (i,) for i, w in enumerate(f.images, start=1))


def permutation_endomorphism(perm: Sequence[int]) -> Endomorphism:
    """x_i -> x_{perm(i)}, with ``perm`` in one-line notation (1-based)."""
    n = len(perm)
    return Endomorphism(n, tuple(Word.generator(n, p) for p in perm))


# ---------------------------------------------------------------------------
# named generators


@dataclass(frozen=True)
class Chi:
    """Conjugates x_k by x_i: x_k -> x_i^-1 x_k x_i."""

    k: int
    i: int

    def validate(self, n: int) -> None:
        if not (1 <= self.k <= n and 1 <= self.i <= n) or self.k == self.i:
            raise ExpressionError(f"invalid chi[{self.k},{self.i}] for n={n}")

    def images(self, n: int, exponent: int) -> dict[int, Word]:
        xk, xi = Word.generator(n, self.k), Word.generator(n, self.i)
        if exponent > 0:
            return {self.k: invert(xi) * xk * xi}
        return {self.k: xi * xk * invert(xi)}

    def __str__(self):
        return f"c[{self.k},{self.i}]"


@dataclass(frozen=True)
class Theta:
    """x_k -> x_k [x_s, x_t]."""

    k: int
    s: int
    t: int

    def validate(self, n: int) -> None:
        idx = (self.k, self.s, self.t)
        if not all(1 <= a <= n for a in idx) or len(set(idx)) != 3 or self.s >= self.t:
            raise ExpressionError(f"invalid th[{self.k};{self.s},{self.t}] for n={n}")

    def images(self, n: int, exponent: int) -> dict[int, Word]:
        c = commutator(Word.generator(n, self.s), Word.generator(n, self.t))
        if exponent < 0:
            c = invert(c)
        return {self.k: Word.generator(n, self.k) * c}

    def __str__(self):
        return f"th[{self.k};{self.s},{self.t}]"


@dataclass(frozen=True)
class Xi:
    """Swap x_i and x_{i+1}."""

    i: int

    def validate(self, n: int) -> None:
        if not 1 <= self.i <= n - 1:
            raise ExpressionError(f"invalid xi[{self.i}] for n={n}")

    def images(self, n: int, exponent: int) -> dict[int, Word]:
        return {self.i: Word.generator(n, self.i + 1), self.i + 1: Word.generator(n, self.i)}

    def __str__(self):
        return f"xi[{self.i}]"


@dataclass(frozen=True)
class Tau:
    """x_i -> x_i^-1."""

    i: int

    def validate(self, n: int) -> None:
        if not 1 <= self.i <= n:
            raise ExpressionError(f"invalid tau[{self.i}] for n={n}")

    def images(self, n: int, exponent: int) -> dict[int, Word]:
        return {self.i: Word.generator(n, self.i, -1)}

    def __str__(self):
        return f"tau[{self.i}]"


@dataclass(frozen=True)
class Delta:
    """x_1 -> x_1 x_2."""

    def validate(self, n: int) -> None:
        if n < 2:
            raise ExpressionError("delta needs n >= 2")

    def images(self, n: int, exponent: int) -> dict[int, Word]:
        return {1: Word(n, (1, 2 if exponent > 0 else -2))}

    def __str__(self):
        return "delta"


@dataclass(frozen=True)
class Sigma:
    """x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}."""

    i: int

    def validate(self, n: int) -> None:
        if not 1 <= self.i <= n - 1:
            raise ExpressionError(f"invalid s[{self.i}] for n={n}")

    def images(self, n: int, exponent: int) -> dict[int, Word]:
        i, j = self.i, self.i + 1
        if exponent > 0:
            return {i: Word(n, (j,)), j: Word(n, (-j, i, j))}
        return {i: Word(n, (i, j, -i)), j: Word(n, (i,))}

    def __str__(self):
        return f"s[{self.i}]"


AutGenerator = Union[Chi, Theta, Xi, Tau, Delta, Sigma]


def generator_endomorphism(g: AutGenerator, exponent: int, n: int) -> Endomorphism:
    if exponent not in (1, -1):
        raise ExpressionError(f"exponent must be +1 or -1, got {exponent}")
    g.validate(n)
    return Endomorphism.from_images(n, g.images(n, exponent))


# ---------------------------------------------------------------------------
# formal expressions


@dataclass(frozen=True)
class GroupExpression:
    """A formal word in named generators; factors are ``(generator, +-1)``.

    Construction does not cancel anything, so relations are kept exactly as
    written; use :meth:`free_reduce` to cancel adjacent inverse factors.
    """

    rank: int
    factors: tuple[tuple[AutGenerator, int], ...] = ()

    def __post_init__(self):
        factors = tuple((g, int(e)) for g, e in self.factors)
        for g, e in factors:
            if e not in (1, -1):
                raise ExpressionError(f"exponent must be +1 or -1, got {e}")
            g.validate(self.rank)
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, rank: int, *items: AutGenerator | tuple[AutGenerator, int] | "GroupExpression") -> "GroupExpression":
        """Concatenate generators, ``(generator, exponent)`` pairs and expressions."""
        factors: list[tuple[AutGenerator, int]] = []
        for item in items:
            if isinstance(item, GroupExpression):
                factors.extend(item.factors)
            elif isinstance(item, tuple):
                factors.append(item)
            else:
                factors.append((item, 1))
        return cls(rank, tuple(factors))

    def __mul__(self, other: "GroupExpression") -> "GroupExpression":
        if other.rank != self.rank:
            raise ExpressionError(f"rank mismatch: {self.rank} != {other.rank}")
        return GroupExpression(self.rank, self.factors + other.factors)

    def __invert__(self) -> "GroupExpression":
        return invert_expression(self)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return format_expression(self)

    def free_reduce(self) -> "GroupExpression":
        stack: list[tuple[AutGenerator, int]] = []
        for g, e in self.factors:
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        return GroupExpression(self.rank, tuple(stack))

    def at_rank(self, rank: int) -> "GroupExpression":
        return GroupExpression(rank, self.factors)


def commutator_expression(a: GroupExpression, b: GroupExpression) -> GroupExpression:
    """[a, b] = a^-1 b^-1 a b, as a formal expression."""
    return invert_expression(a) * invert_expression(b) * a * b


def invert_expression(e: GroupExpression) -> GroupExpression:
    return GroupExpression(e.rank, tuple((g, -x) for g, x in reversed(e.factors)))


def evaluate(e: GroupExpression) -> Endomorphism:
    return _fold(
        compose,
        (generator_endomorphism(g, x, e.rank) for g, x in e.factors),
        Endomorphism.identity(e.rank),
    )


_FACTOR = re.compile(
    r"""(?:
        c\[\s*(?P<ck>\d+)\s*,\s*(?P<ci>\d+)\s*\]
      | th\[\s*(?P<tk>\d+)\s*;\s*(?P<ts>\d+)\s*,\s*(?P<tt>\d+)\s*\]
      | xi\[\s*(?P<xi>\d+)\s*\]
      | tau\[\s*(?P<tau>\d+)\s*\]
      | s\[\s*(?P<s>\d+)\s*\]
      | (?P<delta>delta)
    )(?:\^(?P<exp>[+-]?1))?""",
    re.VERBOSE,
)


def parse_expression(text: str, rank: int) -> GroupExpression:
    """Parse e.g. ``"c[3,2]^-1 * c[2,1] * xi[1]"``.

    >>> str(parse_expression("c[3,2]^-1 * c[2,1]*xi[1]", 3))
    'c[3,2]^-1 * c[2,1] * xi[1]'
    """
    factors = []
    pos = 0
    while True:
        while pos < len(text) and (text[pos].isspace() or text[pos] == "*"):
            pos += 1
        if pos >= len(text):
            break
        m = _FACTOR.match(text, pos)
        if m is None:
            raise ExpressionError(f"syntax error at position {pos}: {text[pos:pos + 12]!r}")
        d = m.groupdict()
        if d["ck"]:
            g: AutGenerator = Chi(int(d["ck"]), int(d["ci"]))
        elif d["tk"]:
            g = Theta(int(d["tk"]), int(d["ts"]), int(d["tt"]))
        elif d["xi"]:
            g = Xi(int(d["xi"]))
        elif d["tau"]:
            g = Tau(int(d["tau"]))
        elif d["s"]:
            g = Sigma(int(d["s"]))
        else:
            g = Delta()
        factors.append((g, int(d["exp"] or 1)))
        pos = m.end()
        if pos < len(text) and not (text[pos].isspace() or text[pos] == "*"):
            raise ExpressionError(f"syntax error at position {pos}: {text[pos:pos + 12]!r}")
    return GroupExpression(rank, tuple(factors))


def format_expression(e: GroupExpression) -> str:
    return " * ".join(f"{g}^-1" if x < 0 else str(g) for g, x in e.factors)


def chi_expression(rank: int, pairs: Iterable[tuple[int, int] | tuple[int, int, int]]) -> GroupExpression:
    """Shorthand: ``[(k, i), (k, i, -1), ...]`` -> product of chi factors."""
    factors = []
    for p in pairs:
        k, i, *rest = p
        factors.append((Chi(k, i), rest[0] if rest else 1))
    return GroupExpression(rank, tuple(factors))
