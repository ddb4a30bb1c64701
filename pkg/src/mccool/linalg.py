"""Exact sparse row reduction over Q and elementary divisors over Z."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = Mapping[Hashable, int | Fraction]


class Echelon:
    """Incrementally maintained echelon basis of a subspace of Q^(columns).

    Columns are any mutually comparable keys; a row's pivot is its smallest
    key.  Rows are not back-substituted, which is enough for rank and
    membership queries.
    """

    def __init__(self):
        self.rows: dict[Hashable, dict[Hashable, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector) -> dict[Hashable, Fraction]:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                break
            c = v[p]
            for k, a in row.items():
                x = v.get(k, 0) - c * a
                if x:
                    v[k] = x
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Vector) -> bool:
        """Insert vec; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        c = v[p]
        self.rows[p] = {k: a / c for k, a in v.items()}
        return True

    def extend(self, vecs: Iterable[Vector]) -> int:
        return sum(self.add(v) for v in vecs)

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)


def rank(vecs: Iterable[Vector]) -> int:
    e = Echelon()
    e.extend(vecs)
    return e.rank


def elementary_divisors(matrix: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix (Smith normal form)."""
    a = [list(r) for r in matrix if any(r)]
    divisors = []
    while a and a[0]:
        # pick the entry of smallest absolute value as pivot
        best = None
        for i, r in enumerate(a):
            for j, x in enumerate(r):
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[0], a[i] = a[i], a[0]
        for r in a:
            r[0], r[j] = r[j], r[0]
        p = a[0][0]
        dirty = False
        for r in a[1:]:
            q = r[0] // p
            if q:
                for t in range(len(r)):
                    r[t] -= q * a[0][t]
            dirty |= r[0] != 0
        for t in range(1, len(a[0])):
            q = a[0][t] // p
            if q:
                for r in a:
                    r[t] -= q * r[0]
            dirty |= a[0][t] != 0
        if dirty:
            continue
        if any(x % p for r in a[1:] for x in r[1:]):
            # push a non-divisible entry into the first row and retry
            for r in a[1:]:
                if any(x % p for x in r[1:]):
                    a[0] = [x + y for x, y in zip(a[0], r)]
                    break
            continue
        divisors.append(abs(p))
        a = [r[1:] for r in a[1:] if any(r[1:])]
    return divisors
