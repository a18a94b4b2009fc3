from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hrindex import make_corpus

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

counts_lists = st.lists(st.integers(0, 60), max_size=40).map(lambda c: sorted(c, reverse=True))


@st.composite
def records(draw, max_papers=12, first=1990, last=2005, strict=True):
    n = draw(st.integers(0, max_papers))
    out = []
    for i in range(n):
        pub = draw(st.integers(first, last))
        lo = pub if strict else first
        cites = draw(st.dictionaries(st.integers(lo, last), st.integers(0, 30), max_size=6))
        out.append((f"p{i}", pub, cites))
    return out


corpora = records().map(make_corpus)
nonempty_records = records().filter(bool)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def golden_dir():
    return GOLDEN


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
