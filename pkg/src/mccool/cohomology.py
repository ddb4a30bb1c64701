"""The integral cohomology ring of PSigma_n^+.

Degree-1 generators d[i,j] (1 <= j < i <= n) are dual to chi_{i,j}.  They
anticommute, square to zero, and satisfy

    d[i,j] * (d[i,k] - d[j,k]) = 0      for k < j < i.

Admissible monomials (strictly increasing rows) form a Z-basis.  Reduction
sorts factors by row with signs and rewrites the leftmost same-row pair
d[i,j] d[i,k] (k < j) to d[i,j] d[j,k]; each rewrite lowers the sum of rows,
so reduction terminates.
"""

from __future__ import annotations

import random
import re
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Mapping, Sequence

from .linalg import Echelon, elementary_divisors
from .series import TruncatedSeries, polynomial

Gen = tuple[int, int]
Monomial = tuple[Gen, ...]


class CohomologyError(ValueError):
    pass


def _validate(n: int, factors: Iterable[Gen]) -> tuple[Gen, ...]:
    out = tuple((int(i), int(j)) for i, j in factors)
    for i, j in out:
        if not 1 <= j < i <= n:
            raise CohomologyError(f"d[{i},{j}] is not a generator for n={n}")
    return out


def is_admissible(m: Sequence[Gen]) -> bool:
    return all(a[0] < b[0] for a, b in zip(m, m[1:]))


def _sort_rows(w: tuple[Gen, ...]) -> tuple[tuple[Gen, ...], int]:
    """Stable sort by row; the sign is the parity of the permutation used."""
    w = list(w)
    sign = 1
    for p in range(1, len(w)):
        q = p
        while q > 0 and w[q - 1][0] > w[q][0]:
            w[q - 1], w[q] = w[q], w[q - 1]
            sign = -sign
            q -= 1
    return tuple(w), sign


def _rewrite_pair(a: Gen, b: Gen) -> tuple[int, tuple[Gen, Gen]] | None:
    """Rewrite a same-row pair; None means the product vanishes."""
    if a == b:
        return None
    sign = 1
    if a[1] < b[1]:
        a, b = b, a
        sign = -1
    # a = (i, j), b = (i, k), k < j
    return sign, (a, (a[1], b[1]))


def _reduce(terms: Mapping[tuple[Gen, ...], int]) -> dict[Monomial, int]:
    result: dict[Monomial, int] = defaultdict(int)
    work = list(terms.items())
    while work:
        w, c = work.pop()
        w, sign = _sort_rows(w)
        c *= sign
        for p in range(len(w) - 1):
            if w[p][0] == w[p + 1][0]:
                r = _rewrite_pair(w[p], w[p + 1])
                if r is not None:
                    s, pair = r
                    work.append((w[:p] + pair + w[p + 2:], c * s))
                break
        else:
            result[w] += c
    return {m: c for m, c in result.items() if c}


def reduce_randomly(factors: Sequence[Gen], coefficient: int = 1, rng: random.Random | None = None) -> dict[Monomial, int]:
    """Normal form reached by applying rewrite steps in a random order.

    Used to test confluence; the result must equal :func:`normalize`.
    """
    rng = rng or random.Random()
    result: dict[Monomial, int] = defaultdict(int)
    work = [(tuple(factors), coefficient)]
    while work:
        w, c = work.pop(rng.randrange(len(work)))
        swaps = [p for p in range(len(w) - 1) if w[p][0] > w[p + 1][0]]
        pairs = [p for p in range(len(w) - 1) if w[p][0] == w[p + 1][0]]
        moves = [("swap", p) for p in swaps] + [("pair", p) for p in pairs]
        if not moves:
            result[w] += c
            continue
        kind, p = rng.choice(moves)
        if kind == "swap":
            work.append((w[:p] + (w[p + 1], w[p]) + w[p + 2:], -c))
        else:
            r = _rewrite_pair(w[p], w[p + 1])
            if r is not None:
                s, pair = r
                work.append((w[:p] + pair + w[p + 2:], c * s))
    return {m: c for m, c in result.items() if c}


@dataclass(frozen=True)
class CohomologyClass:
    n: int
    degree: int
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def from_terms(cls, n: int, degree: int, terms: Mapping[Monomial, int]) -> "CohomologyClass":
        for m in terms:
            if len(m) != degree or not is_admissible(m):
                raise CohomologyError(f"{format_monomial(m)} is not an admissible monomial of degree {degree}")
            _validate(n, m)
        return cls(n, degree, tuple(sorted((m, c) for m, c in terms.items() if c)))

    @classmethod
    def unit(cls, n: int) -> "CohomologyClass":
        return cls(n, 0, (((), 1),))

    @classmethod
    def generator(cls, n: int, i: int, j: int) -> "CohomologyClass":
        return normalize(n, [(i, j)])

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if other.n != self.n:
            raise CohomologyError("rank mismatch")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.degree != self.degree:
            raise CohomologyError("cannot add classes of different degrees")
        acc = defaultdict(int, self.as_dict())
        for m, c in other.terms:
            acc[m] += c
        return CohomologyClass.from_terms(self.n, self.degree, acc)

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(self.n, self.degree, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_class(self)

    def to_json(self) -> dict[str, int]:
        return {format_monomial(m): c for m, c in self.terms}


def normalize(n: int, factors: Sequence[Gen], coefficient: int = 1) -> CohomologyClass:
    """Reduce coefficient * (product of factors) to admissible monomials.

    >>> str(normalize(3, [(3, 2), (3, 1)]))
    '-d[2,1]*d[3,2]'
    """
    w = _validate(n, factors)
    return CohomologyClass.from_terms(n, len(w), _reduce({w: coefficient}))


def multiply(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    if a.n != b.n:
        raise CohomologyError(f"rank mismatch: {a.n} != {b.n}")
    prods = defaultdict(int)
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            prods[ma + mb] += ca * cb
    return CohomologyClass.from_terms(a.n, a.degree + b.degree, _reduce(prods))


def basis(n: int, k: int) -> list[Monomial]:
    if k < 0:
        raise CohomologyError("degree must be nonnegative")
    out = []
    for rows in combinations(range(2, n + 1), k):
        for cols in product(*(range(1, i) for i in rows)):
            out.append(tuple(zip(rows, cols)))
    return sorted(out)


def poincare_polynomial(n: int) -> TruncatedSeries:
    """Betti numbers of PSigma_n^+, counted from the basis and checked against prod (1 + k t)."""
    if n < 2:
        raise CohomologyError("n must be at least 2")
    counts = [len(basis(n, k)) for k in range(n)]
    closed = polynomial([1], n - 1)
    for k in range(1, n):
        closed = closed * polynomial([1, k], n - 1)
    if tuple(counts) != closed.coefficients:
        raise AssertionError(f"basis counts {counts} disagree with product {closed.coefficients}")
    return closed


# ---------------------------------------------------------------------------
# independent check by linear algebra in the exterior algebra


def _generators(n: int) -> list[Gen]:
    return [(i, j) for i in range(2, n + 1) for j in range(1, i)]


def _exterior_product(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign and sorted support of a product of odd generators (sign 0 if repeated)."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1) ** inv, tuple(sorted(idx))


def _relation_terms(n: int) -> list[dict[tuple[int, ...], int]]:
    index = {g: p for p, g in enumerate(_generators(n))}
    rels = []
    for i in range(1, n + 1):
        for j in range(1, i):
            for k in range(1, j):
                # d[i,j] d[i,k] - d[i,j] d[j,k]
                rel: dict[tuple[int, ...], int] = defaultdict(int)
                for coeff, second in ((1, (i, k)), (-1, (j, k))):
                    s, m = _exterior_product([index[(i, j)], index[second]])
                    rel[m] += coeff * s
                rels.append({m: c for m, c in rel.items() if c})
    return rels


def _ideal_vectors(n: int, d: int) -> list[dict[tuple[int, ...], int]]:
    N = len(_generators(n))
    vecs = []
    for rel in _relation_terms(n):
        for mono in combinations(range(N), d - 2):
            v: dict[tuple[int, ...], int] = defaultdict(int)
            for m, c in rel.items():
                s, supp = _exterior_product(m + mono)
                if s:
                    v[supp] += s * c
            v = {k: c for k, c in v.items() if c}
            if v:
                vecs.append(v)
    return vecs


def oracle_reduce(n: int, max_degree: int = 3) -> dict[int, int]:
    """Ranks of the exterior algebra modulo the relation ideal, degree by degree."""
    N = len(_generators(n))
    ranks = {}
    for d in range(0, max_degree + 1):
        ech = Echelon()
        if d >= 2:
            ech.extend(_ideal_vectors(n, d))
        ranks[d] = comb(N, d) - ech.rank
    return ranks


def oracle_torsion_free(n: int, max_degree: int = 3) -> bool:
    """Whether the integral relation ideal is saturated (quotient torsion free) in each degree."""
    N = len(_generators(n))
    for d in range(2, max_degree + 1):
        cols = list(combinations(range(N), d))
        pos = {c: p for p, c in enumerate(cols)}
        rows = []
        for v in _ideal_vectors(n, d):
            r = [0] * len(cols)
            for k, c in v.items():
                r[pos[k]] = c
            rows.append(r)
        if any(x != 1 for x in elementary_divisors(rows)):
            return False
    return True


# ---------------------------------------------------------------------------
# text format


_FACTOR = re.compile(r"d\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_monomial(text: str, n: int) -> tuple[Gen, ...]:
    """``"d[3,1]*d[3,2]"`` -> ((3, 1), (3, 2)); ``"1"`` or ``""`` is the unit."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for part in text.split("*"):
        m = _FACTOR.fullmatch(part.strip())
        if m is None:
            raise CohomologyError(f"cannot parse factor {part.strip()!r}")
        out.append((int(m.group(1)), int(m.group(2))))
    return _validate(n, out)


def format_monomial(m: Sequence[Gen]) -> str:
    return "*".join(f"d[{i},{j}]" for i, j in m) or "1"


def format_class(c: CohomologyClass) -> str:
    if c.is_zero():
        return "0"
    parts = []
    for m, x in c.terms:
        mono = format_monomial(m)
        if x == 1:
            parts.append(f"+{mono}")
        elif x == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{x:+d}*{mono}")
    s = " ".join(parts)
    return s[1:] if s.startswith("+") else s
