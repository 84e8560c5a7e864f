import pytest
from hypothesis import strategies as st

from pseudostandard import BINARY, TERNARY, DirectiveBiSeq

ACCEPTANCE_LINES: dict = {}


@st.composite
def biseqs(draw, alphabet=TERNARY, min_len=0, max_len=10):
    n = draw(st.integers(min_len, max_len))
    thetas = "R012" if alphabet is TERNARY else "RE"
    delta = draw(st.text(alphabet=alphabet.letters, min_size=n, max_size=n))
    theta = draw(st.text(alphabet=thetas, min_size=n, max_size=n))
    return DirectiveBiSeq(delta, theta, alphabet)


ternary = biseqs
binary = lambda **kw: biseqs(alphabet=BINARY, **kw)  # noqa: E731


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture
def report():
    def _report(number: int, ok: bool, detail: str):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)
        return ok

    return _report
