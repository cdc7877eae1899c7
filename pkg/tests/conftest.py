import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from conjvar.quantum_core import random_density, random_pure_state

SQRT2 = np.sqrt(2.0)
KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)
PLUS = np.array([1, 1], dtype=complex) / SQRT2
MINUS = np.array([1, -1], dtype=complex) / SQRT2


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_distribution(n, rng):
    w = rng.uniform(size=n)
    return w / w.sum()


def random_phases(n, rng):
    return rng.uniform(-np.pi, np.pi, size=n)


def distributions(min_size=2, max_size=6):
    """Hypothesis strategy for probability vectors (may contain exact zeros)."""
    weights = st.lists(
        st.one_of(st.just(0.0), st.floats(min_value=1e-6, max_value=1.0)),
        min_size=min_size, max_size=max_size,
    ).filter(lambda w: sum(w) > 0)
    return weights.map(lambda w: np.asarray(w) / np.sum(w))


__all__ = ["random_density", "random_pure_state"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
