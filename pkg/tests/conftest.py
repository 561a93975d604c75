import pytest

from qesoptics.suite import standard_models


@pytest.fixture(scope="session")
def models():
    return standard_models()


@pytest.fixture(scope="session")
def shg(models):
    return models["shg"]


@pytest.fixture(scope="session")
def thg(models):
    return models["thg"]


@pytest.fixture(scope="session")
def cascade2(models):
    return models["cascade2"]


@pytest.fixture(scope="session")
def general(models):
    return models["general"]


_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def acceptance():
    """Record one status line per acceptance criterion."""
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[key])
