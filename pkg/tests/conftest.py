import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conformal_jordan.jordan_core import make_algebra  # noqa: E402

MATRIX_KEYS = [(family, size) for family in ("SymR", "HermC", "HermH") for size in (1, 2, 3, 4)]
SPIN_KEYS = [("SpinFactor", d) for d in (2, 3, 4, 5, 6)]
DIRECT_SUM_KEYS = [("DirectSum:SymR", 2), ("DirectSum:HermC", 2), ("DirectSum:SpinFactor", 4)]
ALL_KEYS = MATRIX_KEYS + SPIN_KEYS + DIRECT_SUM_KEYS
SIMPLE_KEYS = MATRIX_KEYS + SPIN_KEYS


def key_id(key):
    return f"{key[0]}-{key[1]}"


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def algebra_for(key):
    return make_algebra(*key)


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        passed, title, detail = RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} [{number:2d}] {title}: {detail}")
