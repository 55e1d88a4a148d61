"""The eleven acceptance criteria, one test each; every run prints a pass/fail line per criterion."""

import pytest

from monoidtab.acceptance import CRITERIA

RESULTS: list[str] = []

DESCRIPTIONS = {
    1: "monoid cardinalities, n <= 5",
    2: "semistandard basis and R-module dimensions, |lam/mu| <= 5, n <= 4",
    3: "symmetrised functor vs all-ones weight spaces, |lam| <= 3, n <= 4",
    4: "S_n restriction characters, n <= 5",
    5: "block restriction identity and chains",
    6: "Norton irreducibility over IS_3 and T_3",
    7: "non-isomorphism tables, n = 3, 4",
    8: "commutative Cauchy quotients and chains",
    9: "orbit harmonics gr I(Z) = J, n <= 3",
    10: "skew Cauchy quotients, chains and membership",
    11: "counting identities",
}


def _run(k: int, slow: bool = False):
    rep = CRITERIA[k](slow=slow)
    d = rep.data
    label = DESCRIPTIONS[k] if not slow else DESCRIPTIONS[k].replace("n <= 3", "n <= 4")
    line = (f"criterion {k:>2} [{rep.status.upper():<4}] {label}: {d['checked']} checks, "
            f"{d['failure_count']} failures, {d['elapsed_seconds']}s (budget {d['budget_seconds']})")
    RESULTS.append(line)
    print(line)
    return rep


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    rep = _run(k)
    assert rep.status == "pass", rep.data.get("failures")
    assert rep.data["within_budget"]


@pytest.mark.slow
def test_criterion_9_slow_suite():
    rep = _run(9, slow=True)
    assert rep.status == "pass", rep.data.get("failures")
    assert rep.data["hilbert"]["IS_4"] == [1, 16, 72, 96, 24]
    assert rep.data["hilbert"]["PT_4"] == [1, 16, 96, 256, 256]
    assert rep.data["hilbert"]["T_4"] == [1, 12, 54, 108, 81]
