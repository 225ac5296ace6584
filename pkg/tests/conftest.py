import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# criterion number -> (title, outcome)
_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _CRITERIA.setdefault(number, [title, None])


def pytest_runtest_logreport(report):
    if report.when not in ("setup", "call"):
        return
    # the nodeid does not carry markers, so match on the recorded test name
    for number, entry in _CRITERIA.items():
        if report.nodeid.split("::")[-1].startswith("test_criterion_%02d_" % number):
            if report.failed:
                entry[1] = "FAIL"
            elif report.when == "call" and entry[1] is None:
                entry[1] = "PASS" if report.passed else "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcome = _CRITERIA[number]
        terminalreporter.write_line("%s criterion %2d: %s" % (outcome or "NOT RUN", number, title))


@pytest.fixture(scope="session")
def small_corpus_7():
    """The small profile at seed 7, every item run once for the whole session."""
    from degreelab.corpus import run_corpus

    return run_corpus(7, "small", jobs=4)
