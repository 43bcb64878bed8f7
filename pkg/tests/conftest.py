from __future__ import annotations

import pytest
from hypothesis import settings

from difflin.model import Model
from difflin.semiring import BOOLEAN, INTEGER, NATURAL, RATIONAL

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

RINGS = {"rational": RATIONAL, "integer": INTEGER, "natural": NATURAL, "boolean": BOOLEAN}


@pytest.fixture
def q_model() -> Model:
    return Model(RATIONAL, {"A": 2, "B": 1})


@pytest.fixture
def z_model() -> Model:
    return Model(INTEGER, {"A": 2, "B": 1})


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
