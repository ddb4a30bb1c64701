"""Truncated integer power series."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 t + ... + c_D t^D."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        d = min(self.degree, other.degree)
        return TruncatedSeries(tuple(
            sum(self[a] * other[m - a] for a in range(m + 1)) for m in range(d + 1)))

    def substitute_negative(self) -> "TruncatedSeries":
        """t -> -t."""
        return TruncatedSeries(tuple((-1) ** i * c for i, c in enumerate(self.coefficients)))

    def __iter__(self):
        return iter(self.coefficients)

    def to_json(self) -> dict:
        return {"coefficients": list(self.coefficients)}


def polynomial(coefficients: Iterable[int], D: int) -> TruncatedSeries:
    c = list(coefficients)[: D + 1]
    return TruncatedSeries(tuple(c + [0] * (D + 1 - len(c))))


def geometric(a: int, D: int) -> TruncatedSeries:
    """1 / (1 - a t)."""
    return TruncatedSeries(tuple(a ** m for m in range(D + 1)))


def product(factors: Iterable[TruncatedSeries], D: int) -> TruncatedSeries:
    out = polynomial([1], D)
    for f in factors:
        out = out * f
    return out


def uea_series(ranks: Mapping[int, int], D: int) -> TruncatedSeries:
    """Hilbert series of U(L) from the graded ranks of L (PBW).

    prod_d (1 - t^d)^(-ranks[d]), truncated at t^D.
    """
    out = polynomial([1], D)
    for d in range(1, D + 1):
        r = ranks.get(d, 0)
        if r < 0:
            raise ValueError(f"negative rank at degree {d}")
        if not r:
            continue
        factor = [0] * (D + 1)
        for m in range(D // d + 1):
            factor[d * m] = comb(r + m - 1, m)
        out = out * TruncatedSeries(tuple(factor))
    return out


def closed_form_series(n: int, D: int) -> TruncatedSeries:
    """prod_{k=1}^{n-1} 1 / (1 - k t)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return product((geometric(k, D) for k in range(1, n)), D)
