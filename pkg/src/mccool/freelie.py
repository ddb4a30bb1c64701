"""Free Lie algebras over Z/Q in the Lyndon basis.

Letters are 1..m, ordered by value.  A Lie element is stored by its
coordinates on Lyndon words (each standing for its standard bracketing).
Arithmetic goes through the embedding into the free associative algebra:
the expansion of the bracketed Lyndon word w equals w plus lexicographically
larger words of the same length, so associative polynomials that are Lie
elements can be read back triangularly.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

Coefficient = Union[int, Fraction]
Poly = dict  # tuple[int, ...] -> coefficient, an element of the free associative algebra


class LieError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Lyndon words


def lyndon_words(m: int, max_length: int) -> Iterator[tuple[int, ...]]:
    """All Lyndon words of length <= max_length over 1..m, in lexicographic order (Duval)."""
    if m < 1 or max_length < 1:
        return
    w = [1]
    while w:
        yield tuple(w)
        # extend periodically, then bump the last letter
        base = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - base])
        while w and w[-1] == m:
            w.pop()
        if w:
            w[-1] += 1


def is_lyndon(w: tuple[int, ...]) -> bool:
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def standard_factorization(w: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """w = u v with v the longest proper suffix that is Lyndon."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise LieError(f"{w} has no standard factorization")


def bracketing(w: tuple[int, ...]):
    """Nested pairs giving the standard bracketing; letters are leaves."""
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (bracketing(u), bracketing(v))


def format_bracket(tree, names=None) -> str:
    if isinstance(tree, tuple):
        return f"[{format_bracket(tree[0], names)},{format_bracket(tree[1], names)}]"
    return names[tree] if names else f"x{tree}"


@dataclass(frozen=True)
class LyndonBracket:
    m: int
    word: tuple[int, ...]

    def __post_init__(self):
        if not is_lyndon(self.word) or max(self.word) > self.m:
            raise LieError(f"{self.word} is not a Lyndon word over 1..{self.m}")

    @property
    def degree(self) -> int:
        return len(self.word)

    def tree(self):
        return bracketing(self.word)

    def __str__(self) -> str:
        return format_bracket(self.tree())


def lyndon_basis(m: int, d: int) -> list[LyndonBracket]:
    return [LyndonBracket(m, w) for w in lyndon_words(m, d) if len(w) == d]


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def witt_rank(m: int, d: int) -> int:
    """Rank of the degree-d part of the free Lie algebra on m generators."""
    if d < 1:
        raise LieError("degree must be positive")
    total = sum(mobius(e) * m ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


# ---------------------------------------------------------------------------
# associative polynomials


def _add_into(acc: dict, p: Mapping, scale: Coefficient = 1) -> None:
    for w, c in p.items():
        x = acc.get(w, 0) + scale * c
        if x:
            acc[w] = x
        else:
            acc.pop(w, None)


def poly_mul(p: Mapping, q: Mapping) -> Poly:
    out: dict = defaultdict(int)
    for u, a in p.items():
        for v, b in q.items():
            out[u + v] += a * b
    return {w: c for w, c in out.items() if c}


def poly_commutator(p: Mapping, q: Mapping) -> Poly:
    out = poly_mul(p, q)
    _add_into(out, poly_mul(q, p), -1)
    return out


@lru_cache(maxsize=None)
def _expansion(w: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    return tuple(poly_commutator(dict(_expansion(u)), dict(_expansion(v))).items())


def expand(w: tuple[int, ...]) -> Poly:
    """The bracketed Lyndon word as an associative polynomial."""
    return dict(_expansion(w))


# ---------------------------------------------------------------------------
# Lie elements


class LieElement:
    """Finite combination of Lyndon brackets over the alphabet 1..m."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[tuple[int, ...], Coefficient] | None = None):
        self.m = m
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if c:
                if max(w) > m:
                    raise LieError(f"letter out of range in {w} for m={m}")
                clean[w] = c
        self.terms: dict[tuple[int, ...], Coefficient] = clean

    @classmethod
    def generator(cls, m: int, a: int) -> "LieElement":
        if not 1 <= a <= m:
            raise LieError(f"generator {a} outside 1..{m}")
        return cls(m, {(a,): 1})

    @classmethod
    def zero(cls, m: int) -> "LieElement":
        return cls(m)

    @classmethod
    def from_poly(cls, m: int, poly: Mapping) -> "LieElement":
        """Read a Lie polynomial back into Lyndon coordinates."""
        rest = {w: c for w, c in poly.items() if c}
        terms = {}
        while rest:
            w = min(rest, key=lambda u: (len(u), u))
            if not is_lyndon(w):
                raise LieError(f"polynomial is not a Lie element (leading word {w})")
            c = rest[w]
            terms[w] = c
            _add_into(rest, expand(w), -c)
        return cls(m, terms)

    def to_poly(self) -> Poly:
        out: dict = {}
        for w, c in self.terms.items():
            _add_into(out, expand(w), c)
        return out

    # arithmetic

    def _same(self, other: "LieElement") -> None:
        if other.m != self.m:
            raise LieError(f"alphabet mismatch: {self.m} != {other.m}")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._same(other)
        out = dict(self.terms)
        _add_into(out, other.terms)
        return LieElement(self.m, out)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement(self.m, {w: -c for w, c in self.terms.items()})

    def __mul__(self, scalar: Coefficient) -> "LieElement":
        return LieElement(self.m, {w: scalar * c for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LieElement({self.m}, {format_lie(self)!r})"

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def component(self, d: int) -> "LieElement":
        return LieElement(self.m, {w: c for w, c in self.terms.items() if len(w) == d})

    def coefficient(self, w: Iterable[int]) -> Coefficient:
        return self.terms.get(tuple(w), 0)


def format_lie(e: LieElement, names=None) -> str:
    if not e.terms:
        return "0"
    parts = []
    for w in sorted(e.terms, key=lambda u: (len(u), u)):
        c = e.terms[w]
        b = format_bracket(bracketing(w), names)
        if c == 1:
            parts.append(f"+ {b}")
        elif c == -1:
            parts.append(f"- {b}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{b}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def bracket(a: LieElement, b: LieElement) -> LieElement:
    a._same(b)
    return LieElement.from_poly(a.m, poly_commutator(a.to_poly(), b.to_poly()))


def bracket_words(m: int, tree) -> LieElement:
    """Evaluate a nested pair of letters, e.g. ``(1, (2, 1))`` -> [x1,[x2,x1]]."""
    if isinstance(tree, tuple):
        return bracket(bracket_words(m, tree[0]), bracket_words(m, tree[1]))
    return LieElement.generator(m, tree)


# ---------------------------------------------------------------------------
# derivations


def derive_poly(images: Mapping[int, Poly], p: Mapping) -> Poly:
    """Apply the derivation determined by letter images to an associative polynomial."""
    out: dict = defaultdict(int)
    for w, c in p.items():
        for pos, a in enumerate(w):
            img = images.get(a)
            if not img:
                continue
            pre, post = w[:pos], w[pos + 1:]
            for u, b in img.items():
                out[pre + u + post] += c * b
    return {w: c for w, c in out.items() if c}


@dataclass(frozen=True)
class Derivation:
    """Derivation of the free Lie algebra on 1..m, fixed by letter images."""

    m: int
    images: tuple[tuple[int, LieElement], ...]

    def __post_init__(self):
        images = tuple(sorted((a, e) for a, e in self.images if e))
        shifts = set()
        for a, e in images:
            if e.m != self.m or not 1 <= a <= self.m:
                raise LieError("derivation image outside the alphabet")
            shifts |= {d - 1 for d in e.degrees()}
        if len(shifts) > 1:
            raise LieError(f"images are not homogeneous of one degree shift: {sorted(shifts)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_images(cls, m: int, images: Mapping[int, LieElement]) -> "Derivation":
        return cls(m, tuple(images.items()))

    @property
    def degree_shift(self) -> int | None:
        for _, e in self.images:
            return min(e.degrees()) - 1
        return None

    def image(self, a: int) -> LieElement:
        return dict(self.images).get(a, LieElement.zero(self.m))

    def is_zero(self) -> bool:
        return not self.images

    def __call__(self, e: LieElement) -> LieElement:
        return apply_derivation(self, e)

    def __add__(self, other: "Derivation") -> "Derivation":
        keys = {a for a, _ in self.images} | {a for a, _ in other.images}
        return Derivation(self.m, tuple((a, self.image(a) + other.image(a)) for a in keys))

    def __neg__(self) -> "Derivation":
        return Derivation(self.m, tuple((a, -e) for a, e in self.images))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.m == other.m and self.images == other.images

    def __hash__(self):
        return hash((self.m, self.images))


def apply_derivation(d: Derivation, e: LieElement) -> LieElement:
    if d.m != e.m:
        raise LieError(f"alphabet mismatch: {d.m} != {e.m}")
    images = {a: img.to_poly() for a, img in d.images}
    return LieElement.from_poly(e.m, derive_poly(images, e.to_poly()))


def bracket_derivations(d: Derivation, e: Derivation) -> Derivation:
    """[D, E] = D E - E D."""
    if d.m != e.m:
        raise LieError(f"alphabet mismatch: {d.m} != {e.m}")
    out = {}
    for a in range(1, d.m + 1):
        out[a] = apply_derivation(d, e.image(a)) - apply_derivation(e, d.image(a))
    return Derivation.from_images(d.m, out)


def derivation_from_chi(k: int, i: int, n: int) -> Derivation:
    """x_k -> [x_k, x_i], every other letter -> 0."""
    if k == i or not (1 <= k <= n and 1 <= i <= n):
        raise LieError(f"invalid indices ({k}, {i}) for n={n}")
    xk, xi = LieElement.generator(n, k), LieElement.generator(n, i)
    return Derivation.from_images(n, {k: bracket(xk, xi)})
