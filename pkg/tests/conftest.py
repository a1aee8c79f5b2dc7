import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# One PASS/FAIL line per acceptance criterion in the terminal summary.
_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.name.startswith("test_criterion_") and rep.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _CRITERIA[item.name] = (rep.passed, doc)
    elif item.name.startswith("test_criterion_") and rep.failed:
        _CRITERIA.setdefault(item.name, (False, item.name))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda n: int(n.split("_")[2])):
        ok, doc = _CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {doc}")
