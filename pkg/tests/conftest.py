import sys
from pathlib import Path

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None)
settings.load_profile("default")

sys.path.insert(0, str(Path(__file__).parent))

from braidcover.braid import BraidWord, FreeWord  # noqa: E402


@st.composite
def braid_words(draw, min_strands=2, max_strands=6, max_len=20):
    p = draw(st.integers(min_strands, max_strands))
    letters = draw(
        st.lists(st.integers(1, p - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len)
    )
    return BraidWord(p, tuple(letters))


@st.composite
def free_words(draw, rank, max_len=10):
    letters = draw(
        st.lists(st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len)
    )
    return FreeWord(rank, tuple(letters))


# filled by test_acceptance.report; echoed after the run so the lines survive output capture
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
