import pytest

from drstree.corpus import random_systems, small_systems

RANDOM_SEED = 20240611
RANDOM_SHAPE = dict(max_attrs=5, max_values=3, max_rules=5, max_len=3)

# criterion number -> (title, outcome); filled in by the acceptance tests
CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def small_corpus():
    return small_systems()


@pytest.fixture(scope="session")
def random_corpus():
    return random_systems(200, seed=RANDOM_SEED, **RANDOM_SHAPE)


@pytest.fixture(scope="session")
def corpus(small_corpus, random_corpus):
    return list(small_corpus) + list(random_corpus)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    CRITERIA[number] = (title, "PASS" if call.excinfo is None else "FAIL")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, outcome = CRITERIA[number]
        terminalreporter.write_line(f"{outcome} criterion {number}: {title}")
