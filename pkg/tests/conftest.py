from __future__ import annotations

from fractions import Fraction

import pytest

from doubleplanes.classify import enumerate_candidates
from doubleplanes.hyperell import Hyperelliptic, make_setup
from doubleplanes.sphere import catalog


@pytest.fixture(scope="session")
def report():
    return enumerate_candidates()


@pytest.fixture(scope="session")
def records(report):
    return report.by_type()


def lift(curve: Hyperelliptic, h, eps: int):
    """The element written (eps, h) for a trivial character: y -> (-1)^eps y."""
    return curve.element(h, curve.chi[h] / 2 + Fraction(eps, 2))


def setup_for(kind: str, n: int, d: int, delta, selector: int = 0):
    return make_setup(catalog(kind, n), d, tuple(delta), selector)


def cycle_type(h) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in h.cycles()))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
