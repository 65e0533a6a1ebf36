import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

from olctkit.gaussian import GaussianSpec, default_grid, gaussian_field
from olctkit.olct import OLCTParams

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

FROZEN = json.loads((Path(__file__).parent / "oracles" / "frozen.json").read_text())


def make_params(a, b, tau=0.0, eta=0.0):
    """A symplectic matrix with the given ``a`` and ``b``."""
    if a == 0:
        return OLCTParams(0.0, b, -1.0 / b, 0.0, tau, eta)
    return OLCTParams(a, b, 0.0, 1.0 / a, tau, eta)


def gaussian(alpha, n=256, alpha2=None, center=(0.0, 0.0)):
    g = GaussianSpec(alpha, alpha if alpha2 is None else alpha2)
    return gaussian_field(g, default_grid(g, n), center)


def rel_linf(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))) / np.max(np.abs(b)))


@pytest.fixture
def frozen():
    return FROZEN


ACCEPTANCE = {}
CALIBRATION = []


def record(criterion, ok, detail):
    """Remember one acceptance outcome for the end-of-run summary."""
    ACCEPTANCE[criterion] = (bool(ok), detail)
    return bool(ok)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE and not CALIBRATION:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        tr.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    for line in CALIBRATION:
        tr.write_line(f"calibration: {line}")
