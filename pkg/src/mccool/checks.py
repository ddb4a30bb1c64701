"""Acceptance checks: each function reproduces one table or identity end to end.

Every check returns a :class:`CheckResult`; ``ok`` already includes the
runtime budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from . import cohomology as coh
from .automorphisms import compose, equal, evaluate, is_identity
from .braidperm import detect, is_basis_conjugating, rho, split
from .freelie import LieElement, bracket, bracket_derivations, derivation_from_chi
from .graded import build_ideal, model_ranks, nonvanishing_witness, quotient_ranks, relation_elements
from .randomgen import (
    random_bp_expression,
    random_chi_expression,
    random_kernel_expression,
    random_word,
    untangling_xis,
)
from .relations import verify_all
from .series import closed_form_series, polynomial, uea_series
from .tower import decompose, gamma, in_kernel, lift, phi, project, retract_plus


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds < self.limit

    def line(self, timings: bool = True) -> str:
        status = "PASS" if self.ok else "FAIL"
        spent = f"{self.seconds:.2f}s, " if timings else ""
        return f"[{status}] {self.number}. {self.title} ({spent}limit {self.limit:g}s)"


def _timed(number: int, title: str, limit: float, body: Callable[[dict], bool]) -> CheckResult:
    details: dict = {}
    start = time.perf_counter()
    passed = bool(body(details))
    return CheckResult(number, title, passed, time.perf_counter() - start, limit, details)


def presentation(seed: int = 0) -> CheckResult:
    def body(d):
        ok = True
        for n in range(2, 7):
            r = verify_all(n)
            d[n] = {"instances": len(r.results), "failures": [list(f) for f in r.failures]}
            ok &= r.ok
        return ok

    return _timed(1, "presentation relations verify for n = 2..6", 10, body)


def tower(seed: int = 0) -> CheckResult:
    def body(d):
        rng = random.Random(seed)
        bad = []
        for n in range(3, 7):
            for variant in ("full", "plus"):
                for _ in range(500):
                    e = random_chi_expression(rng, n - 1, 12, variant)
                    if not equal(evaluate(project(lift(e, variant), variant)), evaluate(e)):
                        bad.append(("section", n, variant, str(e)))
                for _ in range(200):
                    e = random_chi_expression(rng, n, 12, variant)
                    dec = decompose(e, variant)
                    joined = compose(evaluate(dec.w_head), evaluate(dec.x_tail))
                    if not equal(joined, evaluate(e)) or not in_kernel(dec.x_tail, variant):
                        bad.append(("decompose", n, variant, str(e)))
        d["failures"] = bad[:10]
        return not bad

    return _timed(2, "section and decomposition, n = 3..6", 30, body)


def _kernel_free_exhaustive(n: int, max_length: int) -> int:
    """Count nonempty reduced W of length <= max_length with phi(W) trivial.

    Depth-first over reduced words; each child is the parent automorphism
    composed with one more chi_{n,a}^{+-1}.
    """
    from .automorphisms import Chi, generator_endomorphism

    steps = {
        a: generator_endomorphism(Chi(n, abs(a)), 1 if a > 0 else -1, n)
        for a in [*range(1, n), *range(-n + 1, 0)]
    }
    hits = 0
    stack = [((), None)]
    while stack:
        word, f = stack.pop()
        if word and is_identity(f):
            hits += 1
        if len(word) == max_length:
            continue
        for a, g in steps.items():
            if word and word[-1] == -a:
                continue
            stack.append((word + (a,), g if f is None else compose(f, g)))
    return hits


def kernel_freeness(seed: int = 0) -> CheckResult:
    def body(d):
        rng = random.Random(seed)
        bad = []
        for n in range(3, 6):
            for _ in range(500):
                w = random_word(rng, n - 1, 20)
                if retract_plus(evaluate(phi(w))) != w:
                    bad.append((n, str(w)))
        d["round_trip_failures"] = bad[:10]
        hits = {n: _kernel_free_exhaustive(n, 8) for n in (3, 4)}
        d["trivial_images"] = hits
        return not bad and not any(hits.values())

    return _timed(3, "K_n^+ is free: retraction round trip and exhaustive search", 60, body)


EXPECTED_LIE_RANKS = {3: (3, 1, 2, 3, 6), 4: (6, 4, 10, 21)}


def lie_ranks(seed: int = 0) -> CheckResult:
    def body(d):
        ok = True
        for n, expected in EXPECTED_LIE_RANKS.items():
            D = len(expected)
            q = quotient_ranks(n, "plus", D)
            m = model_ranks(n, D)
            d[n] = {"quotient": q, "model": m}
            ok &= tuple(q[k] for k in range(1, D + 1)) == expected
            ok &= tuple(m[k] for k in range(1, D + 1)) == expected
        return ok

    return _timed(4, "row model ranks equal relation-quotient ranks", 120, body)


def series(seed: int = 0) -> CheckResult:
    def body(d):
        ok = True
        for n in range(3, 6):
            a = uea_series(model_ranks(n, 8), 8)
            b = closed_form_series(n, 8)
            d[n] = {"uea": list(a), "closed": list(b)}
            ok &= a == b
        ok &= tuple(uea_series(model_ranks(3, 4), 4)) == (1, 3, 7, 15, 31)
        return ok

    return _timed(5, "enveloping algebra series equals prod 1/(1 - k t)", 60, body)


def _relation_zero(n: int) -> bool:
    for i in range(2, n + 1):
        for k in range(1, i):
            if not coh.normalize(n, [(i, k), (i, k)]).is_zero():
                return False
            for j in range(k + 1, i):
                lhs = coh.normalize(n, [(i, j), (i, k)]) - coh.normalize(n, [(i, j), (j, k)])
                if not lhs.is_zero():
                    return False
    return True


def _random_product(rng: random.Random, n: int, degree: int) -> list[tuple[int, int]]:
    gens = [(i, j) for i in range(2, n + 1) for j in range(1, i)]
    return [rng.choice(gens) for _ in range(degree)]


def cohomology(seed: int = 0) -> CheckResult:
    def body(d):
        rng = random.Random(seed)
        ok = True
        counts = {}
        for n in range(2, 8):
            closed = polynomial([1], n - 1)
            for k in range(1, n):
                closed = closed * polynomial([1, k], n - 1)
            counts[n] = [len(coh.basis(n, k)) for k in range(n)]
            ok &= tuple(counts[n]) == closed.coefficients
            ok &= coh.poincare_polynomial(n) == closed
        ok &= counts[3] == [1, 3, 2] and counts[4] == [1, 6, 11, 6]
        d["betti"] = counts
        d["relations_vanish"] = all(_relation_zero(n) for n in range(2, 7))
        ok &= d["relations_vanish"]
        disagreements = 0
        for _ in range(1000):
            n = rng.randint(2, 5)
            factors = _random_product(rng, n, rng.randint(1, 4))
            reference = coh.normalize(n, factors).as_dict()
            if coh.reduce_randomly(factors, 1, rng) != reference:
                disagreements += 1
        d["confluence_disagreements"] = disagreements
        ok &= disagreements == 0
        for n in (2, 3, 4):
            oracle = coh.oracle_reduce(n, 3)
            ok &= all(oracle[k] == len(coh.basis(n, k)) for k in range(4))
            ok &= coh.oracle_torsion_free(n, 3)
            d[f"oracle_{n}"] = oracle
        product_identity = coh.normalize(3, [(3, 1), (3, 2)]) == coh.normalize(3, [(2, 1), (3, 2)])
        d["product_identity"] = product_identity
        return ok and product_identity

    return _timed(6, "cohomology basis, relations, confluence and oracle", 60, body)


def lie_relations_full(seed: int = 0) -> CheckResult:
    def body(d):
        rng = random.Random(seed)
        ok = True
        for n in (3, 4):
            ideal = build_ideal(n, "full", 2)
            ok &= all(ideal.is_zero(r) for _, _, r in relation_elements(n, "full"))
            ok &= quotient_ranks(n, "full", 1)[1] == n * (n - 1)
            report = verify_all(n, "mccool")
            ok &= report.ok
            for i, j, k in permutations(range(1, n + 1), 3):
                D = derivation_from_chi(k, i, n)
                E = derivation_from_chi(j, i, n) + derivation_from_chi(j, k, n)
                image = bracket_derivations(D, E).image(j)
                x = lambda a: LieElement.generator(n, a)  # noqa: E731
                ok &= bool(image) and image == bracket(x(j), bracket(x(k), x(i)))
                vanishing = bracket_derivations(
                    derivation_from_chi(i, k, n),
                    derivation_from_chi(i, j, n) + derivation_from_chi(k, j, n))
                ok &= vanishing.is_zero()
                ok &= nonvanishing_witness(n, i, j, k, ideal)
        gamma_bad = 0
        for _ in range(200):
            n = rng.randint(3, 6)
            a = random_kernel_expression(rng, n, 8)
            b = random_kernel_expression(rng, n, 8)
            if gamma(a * b) != tuple(x + y for x, y in zip(gamma(a), gamma(b))):
                gamma_bad += 1
        d["gamma_failures"] = gamma_bad
        return ok and not gamma_bad

    return _timed(7, "partial Lie relations and nonvanishing witnesses", 120, body)


def braid_permutation(seed: int = 0) -> CheckResult:
    def body(d):
        rng = random.Random(seed)
        bad = []
        untangled = 0
        for t in range(500):
            n = rng.randint(2, 5)
            e = random_bp_expression(rng, n, 10)
            if t % 2:
                e = e * untangling_xis(rho(e).images)
            f = evaluate(e)
            data = detect(f)
            pure, lam = split(f)
            good = data.permutation == rho(e) == lam
            good &= equal(compose(pure, lam.endomorphism()), f)
            good &= equal(data.reassemble(), f)
            good &= is_basis_conjugating(pure)
            if lam.is_identity():
                untangled += 1
                good &= equal(pure, f)
            if not good:
                bad.append(str(e))
        d["failures"] = bad[:10]
        d["identity_permutations"] = untangled
        return not bad and untangled > 0

    return _timed(8, "braid-permutation split over random xi/sigma words", 30, body)


ALL = {
    1: presentation,
    2: tower,
    3: kernel_freeness,
    4: lie_ranks,
    5: series,
    6: cohomology,
    7: lie_relations_full,
    8: braid_permutation,
}


def run(numbers=None, seed: int = 0) -> list[CheckResult]:
    return [ALL[k](seed) for k in (numbers or sorted(ALL))]
