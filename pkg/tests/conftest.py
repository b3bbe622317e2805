import pytest

from eqos_package.geometry.arrangement import read_arrangement
from eqos_package.infra.config import reset_settings
from eqos_package.infra.execution_logs import clear_execution_logs
from eqos_package.presentations.io import read_ideal_file
from eqos_package.scripts import fixture_path


@pytest.fixture(autouse=True)
def fresh_state(monkeypatch):
    """Every test starts from default settings and an empty execution log."""
    for name in ("MAX_FM_ROWS", "FINGERPRINT_WORKERS", "SAMPLE_POINTS", "SAMPLE_SEED",
                 "CORPUS_SIZE", "CORPUS_SEED", "LOG_LEVEL"):
        monkeypatch.delenv(f"EQOS_{name}", raising=False)
    # load_dotenv must not pick up a developer's .env
    monkeypatch.setattr("eqos_package.infra.config.load_dotenv", lambda *args, **kwargs: False)
    reset_settings()
    clear_execution_logs()
    yield
    reset_settings()


@pytest.fixture
def point():
    return read_arrangement(fixture_path("point.arr"))


@pytest.fixture
def two_points():
    return read_arrangement(fixture_path("two_points.arr"))


@pytest.fixture
def three_lines():
    return read_arrangement(fixture_path("three_lines.arr"))


@pytest.fixture
def boolean3():
    return read_arrangement(fixture_path("boolean3.arr"))


@pytest.fixture
def falk_a():
    return read_arrangement(fixture_path("falk_A.arr"))


@pytest.fixture
def falk_a_prime():
    return read_arrangement(fixture_path("falk_A_prime.arr"))


@pytest.fixture
def falk_j():
    return read_ideal_file(fixture_path("falk_J.ideal"))


@pytest.fixture
def falk_j_prime():
    return read_ideal_file(fixture_path("falk_J_prime.ideal"))


@pytest.fixture
def vertical_a():
    return read_ideal_file(fixture_path("vertical_A.ideal"))


@pytest.fixture
def vertical_a_prime():
    return read_ideal_file(fixture_path("vertical_A_prime.ideal"))
