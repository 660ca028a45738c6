import os
import random
from fractions import Fraction

import pytest
from hypothesis import settings

from gridgons import Grid2

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CRITERIA: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str) -> None:
    CRITERIA[number] = (ok, detail)
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} - {detail}")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        ok, detail = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'} - {detail}")


def rational_grid(rng: random.Random, n: int, spread: int = 20, dens: int = 4) -> Grid2:
    def axis():
        vals = set()
        while len(vals) < n:
            vals.add(Fraction(rng.randint(-spread, spread), rng.randint(1, dens)))
        return sorted(vals)

    return Grid2(axis(), axis())


@pytest.fixture
def rng():
    return random.Random(20240611)
