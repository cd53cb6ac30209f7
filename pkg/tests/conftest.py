import json
import sys
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ORACLES = json.loads((Path(__file__).parent / "oracles" / "frozen.json").read_text())


@pytest.fixture(scope="session")
def oracles():
    return ORACLES


def oracle_table(key: str) -> dict[tuple[int, int], Fraction]:
    """Frozen partial-fraction table as {(i, j): c_ij}."""
    raw = ORACLES["tables"][key]
    return {(int(i), int(j)): Fraction(c) for i, row in raw.items() for j, c in row.items()}


def oracle_mpf(value: str) -> mpmath.mpf:
    with mpmath.workdps(100):
        return mpmath.mpf(value)


def table_matches(table, frozen: dict[tuple[int, int], Fraction]) -> bool:
    order = max(max(j for _, j in frozen), table.order)
    keys = set(table.entries) | {i for i, _ in frozen}
    return all(table.c(i, j) == frozen.get((i, j), 0) for i in keys for j in range(1, order + 1))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
