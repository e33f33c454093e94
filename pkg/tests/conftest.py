import pytest
from hypothesis import settings
from hypothesis import strategies as st

from reynolds.words import Bracket, Letter, Word, is_reynolds_word

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

letters = st.sampled_from(["x", "y", "z"]).map(Letter)

words = st.recursive(
    st.lists(letters, max_size=2).map(Word),
    lambda inner: st.lists(st.one_of(letters, inner.map(Bracket)), max_size=3).map(Word),
    max_leaves=6,
)

reynolds_words = words.filter(is_reynolds_word)


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    doc = getattr(report, "criterion", None) or report.nodeid.split("::")[-1]
    _acceptance.append((doc, report.outcome.upper()))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    doc = (item.function.__doc__ or "").strip().splitlines()
    if doc:
        report.criterion = doc[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for doc, outcome in _acceptance:
        mark = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {doc}")
