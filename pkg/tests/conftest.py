from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from innerrates.corpus import full_corpus
from innerrates.toric import MonomialIdeal

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list = []


@st.composite
def monomial_ideals(draw, max_exp: int = 6, max_mixed: int = 4):
    gens = [(draw(st.integers(1, max_exp)), 0), (0, draw(st.integers(1, max_exp)))]
    gens += draw(st.lists(st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)),
                          max_size=max_mixed))
    gens = [g for g in gens if g != (0, 0)]
    return MonomialIdeal(tuple(gens))


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture
def acceptance():
    def record(k: int, ok: bool, text: str):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {k}: {text}")
        print(ACCEPTANCE_LINES[-1])
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
