from fractions import Fraction

import hypothesis
import pytest

from rubikgalois import fixtures
from rubikgalois.construct import build_theorem1

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=500)
hypothesis.settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def _variant_data(name):
    fx = fixtures.variant(name)
    return build_theorem1(Fraction(fx["t"]), Fraction(fx["s"]), int(fx["v"]), int(fx["w"]))


@pytest.fixture(scope="session")
def main_data():
    return _variant_data("main")


@pytest.fixture(scope="session", params=fixtures.VARIANTS)
def variant_data(request):
    return request.param, _variant_data(request.param)
