"""The acceptance criteria as callable checks.

Each ``criterion_k`` returns a :class:`Report` whose data records the elapsed
time and the time budget; ``slow=True`` widens the parameter ranges where a
slow suite is defined.
"""

from __future__ import annotations

import time
from math import comb, factorial

from .cauchy import (cauchy_filtration_check, closed_form_dim, graded_quotient_dim, row_sum_check,
                     cauchy_chain_check)
from .characters import nonisomorphism_table, verify_symmetric_restriction, verify_block_restriction, verify_last_point_restriction, verify_irreducible
from .functor import build_R_module, expected_R_dim, functor_tensor_check
from .harmonics import check_gr_equals_J
from .monoids import MonoidKind, cardinality_formula, enumerate_monoid
from .partitions import (SkewShape, enumerate_partitions, intermediate_partitions, skew_shapes)
from .report import Report
from .schur import build_schur_module, build_standard_schur_module, build_weyl_module, image_rank
from .skew import (repeated_entry_membership, row_sum_membership, skew_filtration_check, skew_quotient_dim,
                   skew_chain_check)
from .tableaux import count_sst, count_standard

KINDS = (MonoidKind.IS, MonoidKind.PT, MonoidKind.T)


class _Tally:
    def __init__(self, claim: str, budget: float | None, params: dict):
        self.claim, self.budget, self.params = claim, budget, params
        self.failures: list = []
        self.inconclusive: list = []
        self.checked = 0
        self.start = time.perf_counter()

    def record(self, ok: bool, what):
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def report(self, **extra) -> Report:
        elapsed = time.perf_counter() - self.start
        ok = not self.failures and not self.inconclusive
        within = self.budget is None or elapsed <= self.budget
        data = {"checked": self.checked, "failures": self.failures[:20], "failure_count": len(self.failures),
                "inconclusive": self.inconclusive, "elapsed_seconds": round(elapsed, 3),
                "budget_seconds": self.budget, "within_budget": within}
        data.update(extra)
        status = "pass" if ok and within else ("inconclusive" if not self.failures and self.inconclusive else "fail")
        if ok and not within:
            status = "fail"
        return Report(self.claim, self.params, status, data)


def criterion_1(slow: bool = False) -> Report:
    """Enumerated monoid sizes against the closed forms, n = 1..5."""
    t = _Tally("cardinalities", 5.0, {"n": [1, 5]})
    sizes = {}
    for kind in KINDS:
        for n in range(1, 6):
            size = len(enumerate_monoid(kind, n))
            sizes[f"{kind}_{n}"] = size
            t.record(size == cardinality_formula(kind, n), f"{kind}_{n}")
    return t.report(sizes=sizes)


def criterion_2(slow: bool = False, max_outer: int = 7) -> Report:
    """Rank of ``d`` over all tableaux equals the semistandard count, and ``dim R(n)^{lam/mu} = C(n,r) f``."""
    t = _Tally("semistandard_basis", 60.0, {"max_skew_size": 5, "max_outer_size": max_outer, "n": [1, 4]})
    for shape in skew_shapes(max_outer, max_size=5):
        for n in range(1, 5):
            t.record(image_rank(shape, n, "L") == count_sst(shape, n), f"rank {shape} n={n}")
            dim = build_R_module("IS", n, shape, "upper").dim
            t.record(dim == expected_R_dim(n, shape), f"R {shape} n={n}")
    return t.report()


def criterion_3(slow: bool = False) -> Report:
    """Symmetrised functor versus the all-ones weight space of the two tensor products."""
    t = _Tally("functor_vs_tensor_weight_space", None, {"max_size": 3, "n": [1, 4]})
    for n in range(1, 5):
        for r in range(0, min(3, n) + 1):
            for lam in enumerate_partitions(r):
                for m in (build_schur_module(lam, n), build_weyl_module(lam, n)):
                    t.record(functor_tensor_check(m, n).ok, f"{m.name} n={n}")
    return t.report()


def criterion_4(slow: bool = False) -> Report:
    """Restriction to S_n is the sum of Specht characters over horizontal-strip extensions, n <= 5."""
    t = _Tally("branching_rule_symmetric_group", 120.0, {"n": [1, 5]})
    for n in range(1, 6):
        for r in range(0, n + 1):
            for lam in enumerate_partitions(r):
                t.record(verify_symmetric_restriction(lam, n).ok, f"{lam} n={n}")
    return t.report()


def criterion_5(slow: bool = False) -> Report:
    """Block-restriction dimension identity for |lam| <= 4, n <= 5; chain checks at n <= 3."""
    t = _Tally("branching_rule_block", None, {"max_outer_size": 4, "n": [2, 5], "structural_n": [2, 3]})
    for shape in skew_shapes(4):
        for n in range(2, 6):
            for s in range(1, n):
                structural = n <= 3 and shape.size() <= n
                kinds = KINDS if structural else (MonoidKind.IS,)
                for kind in kinds:
                    t.record(verify_block_restriction(kind, shape, n, s, structural=structural).ok, f"{kind} {shape} n={n} s={s}")
            structural = n <= 3 and shape.size() <= n
            for kind in (KINDS if structural else (MonoidKind.IS,)):
                t.record(verify_last_point_restriction(kind, shape, n, structural=structural).ok, f"last point {kind} {shape} n={n}")
    return t.report()


def criterion_6(slow: bool = False, rounds: int = 25, seed: int = 0) -> Report:
    """Norton certificates: every R(3)^lam over IS_3, and R(3)^lam (lam not a column) over T_3."""
    t = _Tally("irreducibility", None, {"n": 3, "rounds": rounds, "seed": seed})
    results = {}
    for r in range(0, 4):
        for lam in enumerate_partitions(r):
            cases = [MonoidKind.IS]
            if r >= 1 and not lam.is_column():
                cases.append(MonoidKind.T)
            for kind in cases:
                rep = verify_irreducible(kind, 3, lam, rounds, seed)
                results[f"{kind} {lam}"] = rep.data["status"]
                if rep.status == "inconclusive":
                    t.inconclusive.append(f"{kind} {lam}")
                t.record(rep.status != "fail", f"{kind} {lam}")
    return t.report(results=results)


def criterion_7(slow: bool = False) -> Report:
    """Invariant tables distinguish all pairs except row pairs ((r),(n-r)); idempotent traces separate those for IS/PT."""
    t = _Tally("nonisomorphism", None, {"n": [3, 4]})
    for kind in KINDS:
        for n in (3, 4):
            t.record(nonisomorphism_table(kind, n).ok, f"{kind} n={n}")
    return t.report()


def criterion_8(slow: bool = False) -> Report:
    """Graded quotient dims (m, n <= 4) and filtration quotients with invariance (m, n, r <= 3)."""
    t = _Tally("cauchy_quotients", 180.0, {"graded": "m,n <= 4", "filtration": "m,n,r <= 3"})
    for kind in KINDS:
        for m in range(1, 5):
            for n in range(1, 5):
                for r in range(0, n + 2):
                    t.record(graded_quotient_dim(kind, m, n, r).ok, f"dim {kind} {m}x{n} r={r}")
    for m in range(1, 4):
        for n in range(1, 4):
            for r in range(0, 4):
                t.record(cauchy_filtration_check(m, n, r).ok, f"unquotiented {m}x{n} r={r}")
                for kind in KINDS:
                    t.record(cauchy_chain_check(kind, m, n, r).ok, f"chain {kind} {m}x{n} r={r}")
    t.record(row_sum_check(3, 3, (2, 1), 20).ok, "row sums in J(T)")
    return t.report()


def criterion_9(slow: bool = False) -> Report:
    """Associated graded of the vanishing ideal equals J degreewise; Hilbert totals equal |Z|."""
    ns = [1, 2, 3, 4] if slow else [1, 2, 3]
    t = _Tally("orbit_harmonics", 1800.0 if slow else 120.0, {"n": ns})
    hilbert = {}
    for kind in KINDS:
        for n in ns:
            rep = check_gr_equals_J(kind, n)
            hilbert[f"{kind}_{n}"] = rep.data["hilbert"]
            t.record(rep.ok, f"{kind} n={n}")
    return t.report(hilbert=hilbert)


def criterion_10(slow: bool = False, samples: int = 100, seed: int = 0) -> Report:
    """Skew quotient dims and chains for m, n <= 3; membership checks on random samples."""
    t = _Tally("skew_cauchy", None, {"m": [1, 3], "n": [1, 3], "samples": samples, "seed": seed})
    for kind in KINDS:
        for m in range(1, 4):
            for n in range(1, 4):
                for r in range(0, m * n + 1):
                    t.record(skew_quotient_dim(kind, m, n, r) == closed_form_dim(kind, m, n, r),
                             f"dim {kind} {m}x{n} r={r}")
                for r in range(0, n + 2):
                    t.record(skew_chain_check(kind, m, n, r).ok, f"chain {kind} {m}x{n} r={r}")
    for m in range(1, 4):
        for n in range(1, 4):
            for r in range(0, 5):
                t.record(skew_filtration_check(m, n, r).ok, f"unquotiented {m}x{n} r={r}")
    t.record(repeated_entry_membership(3, 3, samples, seed).ok, "repeated entries")
    t.record(row_sum_membership(3, 3, samples, seed).ok, "row sums")
    return t.report()


def _between(lam, mu):
    r = lam.size() - mu.size()
    return intermediate_partitions(lam, mu, r, 2 * r)


def criterion_11(slow: bool = False) -> Report:
    """Counting identities behind the dimension arguments."""
    t = _Tally("combinatorial_identities", None, {"max_size": 5})
    for shape in skew_shapes(5):
        lam, mu, r = shape.outer, shape.inner, shape.size()
        f = count_standard(shape)
        for k in range(0, r + 1):
            total = sum(count_standard(SkewShape(nu, mu)) * count_standard(SkewShape(lam, nu))
                        for nu in _between(lam, mu) if nu.size() - mu.size() == k)
            t.record(total == f, f"split {shape} k={k}")
        for n in range(r, 7):
            for s in range(0, n + 1):
                total = sum(comb(s, nu.size() - mu.size()) * count_standard(SkewShape(nu, mu))
                            * comb(n - s, lam.size() - nu.size()) * count_standard(SkewShape(lam, nu))
                            for nu in _between(lam, mu))
                t.record(total == comb(n, r) * f, f"aggregate {shape} n={n} s={s}")
    for r in range(0, 9):
        t.record(sum(count_standard(lam) ** 2 for lam in enumerate_partitions(r)) == factorial(r), f"r={r}")
    for m in range(1, 5):
        for r in range(0, 5):
            total = sum(build_standard_schur_module(lam.conjugate(), m).dim * count_standard(lam)
                        for lam in enumerate_partitions(r))
            t.record(total == (m - 1) ** r, f"m={m} r={r}")
    return t.report()


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 12)}


def run_all(slow: bool = False) -> list[Report]:
    return [CRITERIA[k](slow=slow) for k in sorted(CRITERIA)]
