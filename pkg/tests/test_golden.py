"""Regression against the frozen fixtures in tests/golden (regenerate with ``monoidtab fixtures``)."""

import json
from math import comb, factorial
from pathlib import Path

import jsonschema
import pytest

from monoidtab.cli import GOLDEN_VERSION, golden_fixtures
from monoidtab.report import REPORT_SCHEMA

GOLDEN = Path(__file__).parent / "golden" / GOLDEN_VERSION


@pytest.fixture(scope="module")
def current():
    return json.loads(json.dumps(golden_fixtures()))


def load(name):
    return json.loads((GOLDEN / f"{name}.json").read_text(encoding="utf-8"))


@pytest.mark.parametrize("name", ["monoid_sizes", "schur_weyl_dims", "standard_schur_dims", "specht_characters",
                                  "R_restricted_characters", "cauchy_hilbert", "skew_cauchy_dims",
                                  "orbit_harmonics_hilbert"])
def test_matches_golden(current, name):
    assert current[name] == load(name)


def test_schema_file_is_current():
    schema = load("report_schema")
    assert schema == REPORT_SCHEMA
    jsonschema.Draft202012Validator.check_schema(schema)


def test_golden_values_agree_with_closed_forms():
    sizes = load("monoid_sizes")
    for n in range(1, 5):
        assert sizes[f"IS_{n}"] == sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1))
        assert sizes[f"PT_{n}"] == (n + 1) ** n
        assert sizes[f"T_{n}"] == n ** n
    hil = load("orbit_harmonics_hilbert")
    for n in range(1, 4):
        assert hil[f"IS_{n}"] == [comb(n, r) ** 2 * factorial(r) for r in range(n + 1)]
        assert hil[f"PT_{n}"] == [comb(n, r) * n ** r for r in range(n + 1)]
        # T_1 is a single point, so its quotient stops in degree 0
        assert hil[f"T_{n}"] == [comb(n, r) * (n - 1) ** r for r in range(n + 1 if n > 1 else 1)]
    cauchy = load("cauchy_hilbert")
    for m in range(1, 4):
        for n in range(1, 4):
            assert cauchy[f"PT_{m}x{n}"][:n + 1] == [comb(n, r) * m ** r for r in range(n + 1)]
