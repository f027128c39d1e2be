import os
from pathlib import Path

import pytest
from codedsts.config.schema import SimConfig
from codedsts.config.settings import Settings
from codedsts.simkit.sweep import SweepResult, run_sweep


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "quality: heavy Monte Carlo acceptance runs")


@pytest.fixture(scope="session")
def quality_tests_dir() -> Path:
    return Path(__file__).parent


@pytest.fixture(scope="session")
def config_path(quality_tests_dir: Path) -> Path:
    return quality_tests_dir / "config.toml"


@pytest.fixture(scope="session", autouse=True)
def setup_test_environment(config_path: Path) -> None:
    os.environ["CODEDSTS_CONFIG"] = str(config_path)


@pytest.fixture(scope="session")
def experiment(config_path: Path) -> SimConfig:
    return Settings(config_path=config_path).load().simulation


@pytest.fixture(scope="session")
def sweeps(experiment: SimConfig) -> dict[int, SweepResult]:
    """One full sweep per receive-antenna count, shared by every test in the session."""
    results = {}
    for n_rx in (1, 2, 4):
        print(f"\nSweeping n_rx={n_rx} ({experiment.trials} trials per point)...")
        results[n_rx] = run_sweep(experiment.model_copy(update={"n_rx": n_rx}))
    return results
