"""Executable catalog of the identities among named automorphisms.

Every relation is an ``(lhs, rhs)`` pair of formal expressions; verifying it
means evaluating both sides on F_n and comparing images.

The braid-permutation relations are classically written for automorphisms
acting on the right.  Here composition acts on the left, so each of those
words is stored reversed: a right-action product ``a b c`` is the left-action
product ``c b a``.  (Only the reversed form of ``s_i s_{i+1} xi_i =
xi_{i+1} s_i s_{i+1}`` holds under left composition.)
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable

from .automorphisms import (
    Chi,
    GroupExpression,
    Sigma,
    Tau,
    Xi,
    commutator_expression,
    equal,
    evaluate,
)


@dataclass(frozen=True)
class RelationInstance:
    family: str
    indices: tuple[int, ...]
    lhs: GroupExpression
    rhs: GroupExpression

    @property
    def rank(self) -> int:
        return self.lhs.rank

    def holds(self) -> bool:
        return equal(evaluate(self.lhs), evaluate(self.rhs))


def _c(n, k, i, e=1):
    return GroupExpression(n, ((Chi(k, i), e),))


def _g(n, *factors):
    return GroupExpression.of(n, *factors)


def _one(n):
    return GroupExpression(n)


def _require(n: int, least: int) -> None:
    if n < least:
        raise ValueError(f"n must be at least {least}, got {n}")


# ---------------------------------------------------------------------------
# McCool presentation


def mccool_relations(n: int) -> list[RelationInstance]:
    _require(n, 2)
    out = []
    for i, j, k in permutations(range(1, n + 1), 3):
        out.append(RelationInstance(
            "mccool-1", (i, j, k),
            _c(n, i, j) * _c(n, k, j) * _c(n, i, k),
            _c(n, i, k) * _c(n, i, j) * _c(n, k, j),
        ))
    for k, j, s, t in permutations(range(1, n + 1), 4):
        out.append(RelationInstance(
            "mccool-2", (k, j, s, t), commutator_expression(_c(n, k, j), _c(n, s, t)), _one(n)))
    for i, j, k in permutations(range(1, n + 1), 3):
        out.append(RelationInstance(
            "mccool-3", (i, j, k), commutator_expression(_c(n, i, j), _c(n, k, j)), _one(n)))
    for i, j, k in permutations(range(1, n + 1), 3):
        out.append(RelationInstance(
            "mccool-4", (i, j, k),
            commutator_expression(_c(n, i, j) * _c(n, k, j), _c(n, i, k)), _one(n)))
    return out


# ---------------------------------------------------------------------------
# conjugation by signed permutations


def tau_conjugate(i: int, s: int, t: int) -> tuple[int, int, int]:
    """(k, j, exponent) with tau_i chi_{s,t} tau_i^-1 = chi_{k,j}^exponent."""
    if t == i:
        return s, i, -1
    return s, t, 1


def xi_conjugate(i: int, s: int, t: int) -> tuple[int, int]:
    """(k, j) with xi_i chi_{s,t} xi_i^-1 = chi_{k,j}."""
    if not {i, i + 1} & {s, t}:
        return s, t
    if s == i:
        return (i + 1, t) if t != i + 1 else (i + 1, i)
    if s == i + 1:
        return (i, t) if t != i else (i, i + 1)
    if t == i:
        return s, i + 1
    return s, i  # t == i + 1


def conjugation_formulas(n: int) -> list[RelationInstance]:
    _require(n, 2)
    out = []
    pairs = list(permutations(range(1, n + 1), 2))
    for i in range(1, n + 1):
        for s, t in pairs:
            k, j, e = tau_conjugate(i, s, t)
            out.append(RelationInstance(
                "tau-conjugation", (i, s, t),
                _g(n, Tau(i), Chi(s, t), (Tau(i), -1)), _c(n, k, j, e)))
    for i in range(1, n):
        for s, t in pairs:
            k, j = xi_conjugate(i, s, t)
            out.append(RelationInstance(
                "xi-conjugation", (i, s, t),
                _g(n, Xi(i), Chi(s, t), (Xi(i), -1)), _c(n, k, j)))
    return out


# ---------------------------------------------------------------------------
# normality of the kernel of the projection


def kernel_conjugation_formulas(n: int) -> list[RelationInstance]:
    _require(n, 3)
    out = []
    low = range(1, n)

    def conj(a, b, target):
        # chi_{a,b}^-1 . target . chi_{a,b}
        return _c(n, a, b, -1) * target * _c(n, a, b)

    for i, j in permutations(low, 2):
        out.append(RelationInstance("kernel-i", (i, j), conj(i, j, _c(n, n, j)), _c(n, n, j)))
    for i, k, j in permutations(low, 3):
        out.append(RelationInstance("kernel-ii", (i, k, j), conj(i, k, _c(n, n, j)), _c(n, n, j)))
    for j, k in permutations(low, 2):
        out.append(RelationInstance(
            "kernel-iii", (j, k), conj(j, k, _c(n, n, j)),
            _c(n, n, k) * _c(n, n, j) * _c(n, n, k, -1)))
    for i, k, j in permutations(low, 3):
        out.append(RelationInstance("kernel-iv", (i, k, j), conj(i, k, _c(n, j, n)), _c(n, j, n)))
    for j, i in permutations(low, 2):
        out.append(RelationInstance(
            "kernel-v", (j, i), conj(j, i, _c(n, j, n)),
            _c(n, n, i) * _c(n, j, n) * _c(n, n, i, -1)))
    for i, j in permutations(low, 2):
        out.append(RelationInstance(
            "kernel-vi", (i, j), conj(i, j, _c(n, j, n)),
            _c(n, n, j) * _c(n, i, n, -1) * _c(n, n, j, -1) * _c(n, i, n) * _c(n, j, n)))
    return out


# ---------------------------------------------------------------------------
# braid-permutation group


def _right(n: int, *gens) -> GroupExpression:
    """A right-action word, converted to left action by reversal."""
    return _g(n, *reversed(gens))


def bp_relations(n: int) -> list[RelationInstance]:
    _require(n, 2)
    out = []
    add = out.append
    ids = range(1, n)
    far = [(i, j) for i in ids for j in ids if abs(i - j) > 1]
    for i in ids:
        add(RelationInstance("bp-1", (i,), _right(n, Xi(i), Xi(i)), _one(n)))
    for i, j in far:
        if i < j:
            add(RelationInstance("bp-1", (i, j), _right(n, Xi(i), Xi(j)), _right(n, Xi(j), Xi(i))))
    for i in range(1, n - 1):
        add(RelationInstance(
            "bp-1", (i, i + 1),
            _right(n, Xi(i), Xi(i + 1), Xi(i)), _right(n, Xi(i + 1), Xi(i), Xi(i + 1))))
    for i, j in far:
        if i < j:
            add(RelationInstance(
                "bp-2", (i, j), _right(n, Sigma(i), Sigma(j)), _right(n, Sigma(j), Sigma(i))))
    for i in range(1, n - 1):
        add(RelationInstance(
            "bp-2", (i, i + 1),
            _right(n, Sigma(i), Sigma(i + 1), Sigma(i)),
            _right(n, Sigma(i + 1), Sigma(i), Sigma(i + 1))))
    for i, j in far:
        add(RelationInstance("bp-3", (i, j), _right(n, Xi(i), Sigma(j)), _right(n, Sigma(j), Xi(i))))
    for i in range(1, n - 1):
        add(RelationInstance(
            "bp-3", (i, i + 1, 1),
            _right(n, Xi(i), Xi(i + 1), Sigma(i)), _right(n, Sigma(i + 1), Xi(i), Xi(i + 1))))
        add(RelationInstance(
            "bp-3", (i, i + 1, 2),
            _right(n, Sigma(i), Sigma(i + 1), Xi(i)), _right(n, Xi(i + 1), Sigma(i), Sigma(i + 1))))
    for i in ids:
        # sigma_i o xi_i = chi_{i+1,i} read with right action
        add(RelationInstance("bp-factorization", (i,), _right(n, Sigma(i), Xi(i)), _c(n, i + 1, i)))
    return out


# ---------------------------------------------------------------------------
# verification


ENUMERATORS: dict[str, tuple[int, Callable[[int], list[RelationInstance]]]] = {
    "mccool": (2, mccool_relations),
    "conjugation": (2, conjugation_formulas),
    "kernel": (3, kernel_conjugation_formulas),
    "bp": (2, bp_relations),
}


def all_relations(n: int, family: str | None = None) -> list[RelationInstance]:
    """Every catalogued instance at rank n, optionally filtered by family prefix."""
    out = []
    for least, enum in ENUMERATORS.values():
        if n >= least:
            out.extend(enum(n))
    if family:
        out = [r for r in out if r.family == family or r.family.startswith(family + "-")]
    return out


FAMILIES = (
    "mccool-1", "mccool-2", "mccool-3", "mccool-4",
    "tau-conjugation", "xi-conjugation",
    "kernel-i", "kernel-ii", "kernel-iii", "kernel-iv", "kernel-v", "kernel-vi",
    "bp-1", "bp-2", "bp-3", "bp-factorization",
)


@dataclass
class VerificationReport:
    n: int
    results: list[tuple[str, tuple[int, ...], bool]] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def counts(self) -> dict[str, int]:
        counts = {f: 0 for f in FAMILIES}
        for fam, _, _ in self.results:
            counts[fam] = counts.get(fam, 0) + 1
        return counts

    @property
    def failures(self) -> list[tuple[str, tuple[int, ...]]]:
        return [(f, idx) for f, idx, ok in self.results if not ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "instances": [{"family": f, "indices": list(idx), "ok": ok} for f, idx, ok in self.results],
            "summary": {
                "counts": self.counts,
                "total": len(self.results),
                "failures": len(self.failures),
                "ok": self.ok,
            },
        }


def verify(instances: Iterable[RelationInstance], n: int) -> VerificationReport:
    start = time.perf_counter()
    results = sorted((r.family, r.indices, r.holds()) for r in instances)
    return VerificationReport(n, results, time.perf_counter() - start)


def verify_all(n: int, family: str | None = None) -> VerificationReport:
    _require(n, 2)
    return verify(all_relations(n, family), n)
