import random

import pytest

from exterior_hilbert.combinatorics import subsets
from exterior_hilbert.fields import QQ
from exterior_hilbert.forms import ExteriorForm


def small_form(n, d, rng, field=QQ, density=1.0, span=5):
    """Random form with integer coefficients in [-span, span]."""
    terms = {m: rng.randint(-span, span) for m in subsets(n, d) if rng.random() < density}
    return ExteriorForm(n, d, terms, field)


@pytest.fixture
def rng():
    return random.Random(20240611)


_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance_lines(request):
    return request.config.stash.setdefault(_LINES, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
