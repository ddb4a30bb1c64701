"""Two realizations of the associated graded Lie algebra of PSigma_n^+.

The row model is the iterated semidirect sum of the free Lie algebras
L[chi_{k,1}, ..., chi_{k,k-1}], k = 2..n.  A generator chi_{k,j} acts on a
higher row s as the derivation chi_{s,k} -> [chi_{s,k}, chi_{s,j}] (all other
letters of row s go to 0); compound lower-row elements act through the
associative extension of that assignment.

The quotient model is the free Lie algebra on all generators modulo the ideal
generated by the degree-2 relations, with ranks computed by exact elimination.
The ``full`` variant uses all chi_{k,i}, k != i, and the relations known to
hold in gr(PSigma_n); its ranks are only an upper bound for that algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Literal, Mapping

from .freelie import LieElement, bracket, derive_poly, poly_commutator, witt_rank
from .linalg import Echelon

Variant = Literal["plus", "full"]


# ---------------------------------------------------------------------------
# row model


def model_rank(n: int, d: int) -> int:
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    return sum(witt_rank(k - 1, d) for k in range(2, n + 1))


def model_ranks(n: int, D: int) -> dict[int, int]:
    return {d: model_rank(n, d) for d in range(1, D + 1)}


class ModelElement:
    """Sum over rows k of a Lie element in the letters chi_{k,1..k-1}."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Mapping[int, LieElement] | None = None):
        self.n = n
        clean = {}
        for k, e in (rows or {}).items():
            if not 2 <= k <= n or e.m != k - 1:
                raise ValueError(f"row {k} does not fit n={n}")
            if e:
                clean[k] = e
        self.rows: dict[int, LieElement] = clean

    @classmethod
    def chi(cls, n: int, k: int, j: int) -> "ModelElement":
        if not 1 <= j < k <= n:
            raise ValueError(f"chi[{k},{j}] is not an upper triangular generator for n={n}")
        return cls(n, {k: LieElement.generator(k - 1, j)})

    def _same(self, other: "ModelElement") -> None:
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} != {other.n}")

    def __add__(self, other: "ModelElement") -> "ModelElement":
        self._same(other)
        rows = dict(self.rows)
        for k, e in other.rows.items():
            rows[k] = rows[k] + e if k in rows else e
        return ModelElement(self.n, rows)

    def __neg__(self) -> "ModelElement":
        return ModelElement(self.n, {k: -e for k, e in self.rows.items()})

    def __sub__(self, other: "ModelElement") -> "ModelElement":
        return self + (-other)

    def __mul__(self, c) -> "ModelElement":
        return ModelElement(self.n, {k: c * e for k, e in self.rows.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelElement):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __bool__(self) -> bool:
        return bool(self.rows)

    def degrees(self) -> set[tuple[int, int]]:
        return {(k, d) for k, e in self.rows.items() for d in e.degrees()}

    def __repr__(self) -> str:
        from .freelie import format_lie

        parts = []
        for k in sorted(self.rows):
            names = {j: f"c[{k},{j}]" for j in range(1, k)}
            parts.append(f"row {k}: {format_lie(self.rows[k], names)}")
        return f"ModelElement({self.n}; {'; '.join(parts) or '0'})"


@lru_cache(maxsize=None)
def _letter_action(r: int, j: int, s: int) -> tuple:
    """Images (as frozen polys) of the derivation of row s induced by chi_{r,j}."""
    # chi_{s,r} -> [chi_{s,r}, chi_{s,j}]
    img = poly_commutator({(r,): 1}, {(j,): 1})
    return ((r, tuple(img.items())),)


def act(a: LieElement, r: int, b: LieElement, s: int) -> LieElement:
    """Action of a row-r element on a row-s element, r < s."""
    if not r < s:
        raise ValueError("acting row must be below the target row")
    target = b.to_poly()
    out: dict = {}
    for word, c in a.to_poly().items():
        v = target
        for letter in reversed(word):
            images = {x: dict(p) for x, p in _letter_action(r, letter, s)}
            v = derive_poly(images, v)
            if not v:
                break
        for w, x in v.items():
            y = out.get(w, 0) + c * x
            if y:
                out[w] = y
            else:
                out.pop(w)
    return LieElement.from_poly(s - 1, out)


def model_bracket(a: ModelElement, b: ModelElement) -> ModelElement:
    a._same(b)
    out = ModelElement(a.n)
    for r, x in a.rows.items():
        for s, y in b.rows.items():
            if r == s:
                term = ModelElement(a.n, {r: bracket(x, y)})
            elif r < s:
                term = ModelElement(a.n, {s: act(x, r, y, s)})
            else:
                term = ModelElement(a.n, {r: -act(y, s, x, r)})
            out = out + term
    return out


def plus_relation_triples(n: int) -> Iterator[tuple[str, tuple[int, ...], ModelElement]]:
    """The three relation families, evaluated in the row model."""
    c = lambda k, j: ModelElement.chi(n, k, j)  # noqa: E731
    gens = [(k, j) for k in range(2, n + 1) for j in range(1, k)]
    for (k, j), (s, t) in permutations(gens, 2):
        if not {j, k} & {s, t}:
            yield "disjoint", (k, j, s, t), model_bracket(c(k, j), c(s, t))
    for (k, j), (s, t) in permutations(gens, 2):
        if j == t and k != s:
            yield "common-conjugator", (k, j, s), model_bracket(c(k, j), c(s, j))
    for i in range(1, n + 1):
        for k in range(1, i):
            for j in range(1, k):
                yield "triangle", (i, k, j), model_bracket(c(i, k), c(i, j) + c(k, j))


# ---------------------------------------------------------------------------
# quotient model


def generators(n: int, variant: Variant) -> list[tuple[int, int]]:
    """Ordered generator list; position + 1 is the letter used in the free Lie algebra."""
    if variant == "plus":
        return [(k, j) for k in range(2, n + 1) for j in range(1, k)]
    if variant == "full":
        return [(k, j) for k in range(1, n + 1) for j in range(1, n + 1) if k != j]
    raise ValueError(f"unknown variant {variant!r}")


def _gen_element(index: dict, m: int, k: int, j: int) -> LieElement:
    return LieElement.generator(m, index[(k, j)])


def relation_elements(n: int, variant: Variant) -> list[tuple[str, tuple[int, ...], LieElement]]:
    gens = generators(n, variant)
    index = {g: p + 1 for p, g in enumerate(gens)}
    m = len(gens)
    x = lambda k, j: _gen_element(index, m, k, j)  # noqa: E731
    out = []
    for (k, j), (s, t) in permutations(gens, 2):
        if not {j, k} & {s, t}:
            out.append(("disjoint", (k, j, s, t), bracket(x(k, j), x(s, t))))
    for (k, j), (s, t) in permutations(gens, 2):
        if j == t and k != s:
            out.append(("common-conjugator", (k, j, s), bracket(x(k, j), x(s, j))))
    for i, k, j in permutations(range(1, n + 1), 3):
        if variant == "plus" and not j < k < i:
            continue
        out.append(("triangle", (i, k, j), bracket(x(i, k), x(i, j) + x(k, j))))
    return out


@dataclass
class QuotientIdeal:
    """Degree-by-degree echelon bases of the relation ideal."""

    n: int
    variant: Variant
    pieces: dict[int, Echelon]

    @property
    def alphabet(self) -> int:
        return len(generators(self.n, self.variant))

    def rank(self, d: int) -> int:
        return witt_rank(self.alphabet, d) - (self.pieces[d].rank if d in self.pieces else 0)

    def ranks(self) -> dict[int, int]:
        return {d: self.rank(d) for d in sorted(self.pieces)}

    def is_zero(self, e: LieElement) -> bool:
        """Whether a homogeneous element lies in the ideal."""
        degrees = e.degrees()
        if not degrees:
            return True
        (d,) = degrees
        return self.pieces[d].contains(e.terms) if d in self.pieces else not e


def build_ideal(n: int, variant: Variant, D: int) -> QuotientIdeal:
    if n < 2 or D < 1:
        raise ValueError("need n >= 2 and D >= 1")
    m = len(generators(n, variant))
    pieces = {1: Echelon()}
    if D >= 2:
        ech = Echelon()
        for _, _, r in relation_elements(n, variant):
            ech.add(r.terms)
        pieces[2] = ech
    gens = [LieElement.generator(m, a) for a in range(1, m + 1)]
    for d in range(3, D + 1):
        ech = Echelon()
        for row in pieces[d - 1].rows.values():
            v = LieElement(m, row)
            for g in gens:
                ech.add(bracket(v, g).terms)
        pieces[d] = ech
    return QuotientIdeal(n, variant, pieces)


def quotient_ranks(n: int, variant: Variant, D: int) -> dict[int, int]:
    return build_ideal(n, variant, D).ranks()


def nonvanishing_witness(n: int, i: int, j: int, k: int, ideal: QuotientIdeal | None = None) -> bool:
    """Is [chi_{k,i}, chi_{j,i} + chi_{j,k}] nonzero in the degree-2 full quotient?"""
    if len({i, j, k}) != 3 or not all(1 <= a <= n for a in (i, j, k)):
        raise ValueError(f"indices ({i}, {j}, {k}) must be distinct and in 1..{n}")
    if ideal is None:
        ideal = build_ideal(n, "full", 2)
    return not ideal.is_zero(full_element(n, [(1, (k, i), ((j, i), (j, k)))]))


def full_element(n: int, terms) -> LieElement:
    """Build sum of c * [x_a, sum(x_b)] in the full free Lie algebra; helper for witnesses."""
    gens = generators(n, "full")
    index = {g: p + 1 for p, g in enumerate(gens)}
    m = len(gens)
    total = LieElement.zero(m)
    for c, left, right in terms:
        rhs = LieElement.zero(m)
        for g in right:
            rhs = rhs + LieElement.generator(m, index[g])
        total = total + c * bracket(LieElement.generator(m, index[left]), rhs)
    return total
