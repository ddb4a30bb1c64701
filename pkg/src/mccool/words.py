"""Freely reduced words in the free group F_n.

A letter is a nonzero integer: ``k`` stands for the generator x_k and ``-k``
for its inverse.  Words carry their rank explicitly so that words living in
different free groups are never combined by accident.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class WordError(ValueError):
    """Raised for malformed words, bad indices or rank mismatches."""


class Letter(NamedTuple):
    index: int
    sign: int

    def to_int(self) -> int:
        return self.index * self.sign

    @classmethod
    def from_int(cls, a: int) -> "Letter":
        return cls(abs(a), 1 if a > 0 else -1)


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """An element of F_rank, stored as a freely reduced tuple of signed ints.

    >>> Word(2, (1, -1, 2))
    Word('x2', rank=2)
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise WordError(f"negative rank {self.rank}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.rank:
                raise WordError(f"letter index {abs(a)} out of range 1..{self.rank}")
        object.__setattr__(self, "letters", _free_reduce(letters))

    # construction helpers

    @classmethod
    def identity(cls, rank: int) -> "Word":
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, sign: int = 1) -> "Word":
        return cls(rank, (index * sign,))

    @classmethod
    def from_letters(cls, rank: int, letters: Iterable[Letter]) -> "Word":
        return cls(rank, tuple(Letter(*l).to_int() for l in letters))

    # basic protocol

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        # identity is falsy, like an empty sequence
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, rank={self.rank})"

    def as_letters(self) -> list[Letter]:
        return [Letter.from_int(a) for a in self.letters]

    def is_identity(self) -> bool:
        return not self.letters

    def embed(self, rank: int) -> "Word":
        """The same word viewed in F_rank; rank may only grow."""
        if rank < self.rank:
            raise WordError(f"cannot embed rank {self.rank} word into rank {rank}")
        return Word(rank, self.letters)


def reduce(letters: Iterable[int | Letter], rank: int) -> Word:
    """Freely reduce a raw letter sequence.

    >>> str(reduce([1, -1, 2], 2))
    'x2'
    """
    raw = [l.to_int() if isinstance(l, Letter) else l for l in letters]
    return Word(rank, tuple(raw))


def _check_ranks(a: Word, b: Word) -> None:
    if a.rank != b.rank:
        raise WordError(f"rank mismatch: {a.rank} != {b.rank}")


def multiply(a: Word, b: Word) -> Word:
    _check_ranks(a, b)
    return Word(a.rank, a.letters + b.letters)


def invert(a: Word) -> Word:
    return Word(a.rank, tuple(-x for x in reversed(a.letters)))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b."""
    _check_ranks(a, b)
    return Word(a.rank, invert(a).letters + invert(b).letters + a.letters + b.letters)


def conjugate(w: Word, by: Word) -> Word:
    """by^-1 w by."""
    _check_ranks(w, by)
    return Word(w.rank, invert(by).letters + w.letters + by.letters)


class Peel(NamedTuple):
    conjugator: Word
    index: int
    sign: int


def peel_conjugate(w: Word) -> Optional[Peel]:
    """Write w as U^-1 x_j^sign U with U as short as possible.

    Matched inverse pairs are stripped from both ends; since w is reduced the
    remainder is a single letter exactly when w has conjugate shape.

    >>> peel_conjugate(parse_word("X2 x1 x2", 2))
    Peel(conjugator=Word('x2', rank=2), index=1, sign=1)
    >>> peel_conjugate(parse_word("x1 x2", 2)) is None
    True
    """
    letters = w.letters
    lo, hi = 0, len(letters) - 1
    while hi - lo >= 2 and letters[lo] == -letters[hi]:
        lo += 1
        hi -= 1
    if hi != lo:
        return None
    a = letters[lo]
    return Peel(Word(w.rank, letters[hi + 1:]), abs(a), 1 if a > 0 else -1)


_TOKEN = re.compile(r"([xX])([0-9]+)$")


def parse_word(text: str, rank: int) -> Word:
    """Parse ``x<k>`` / ``X<k>`` tokens separated by spaces or ``*``.

    >>> parse_word("x1 X2", 2).letters
    (1, -2)
    >>> parse_word("", 3).is_identity()
    True
    """
    letters = []
    for m in re.finditer(r"[^\s*]+", text):
        tok = _TOKEN.match(m.group())
        if tok is None:
            raise WordError(f"syntax error at position {m.start()}: {m.group()!r}")
        k = int(tok.group(2))
        if k < 1 or k > rank:
            raise WordError(f"generator index {k} at position {m.start()} out of range 1..{rank}")
        letters.append(k if tok.group(1) == "x" else -k)
    return Word(rank, tuple(letters))


def format_word(w: Word | Sequence[int]) -> str:
    letters = w.letters if isinstance(w, Word) else w
    return " ".join(f"x{a}" if a > 0 else f"X{-a}" for a in letters)
