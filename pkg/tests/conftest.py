# standard
from collections.abc import Callable

# third-party
import pytest

# internal
from lca.models import GridIntensity, LifetimePolicy
from profile_store import GridTable, ProfileDocument, ProfileStore
from profile_store.data import bundled_data_path
from report import Reporter
from report.cli import main
from scenario import Scenario

CPU_PRESET: str = "sapphire-rapids-8468"
GPU_PRESET: str = "h100-sxm5-dgx-node"

CliRunner = Callable[..., tuple[int, str, str]]


@pytest.fixture(scope="session")
def store() -> ProfileStore:
    return ProfileStore(bundled_data_path)


@pytest.fixture(scope="session")
def grid_table(store: ProfileStore) -> GridTable:
    return store.load_grid_table()


@pytest.fixture(scope="session")
def cpu_doc(store: ProfileStore) -> ProfileDocument:
    return store.load_profile(CPU_PRESET)


@pytest.fixture(scope="session")
def gpu_doc(store: ProfileStore) -> ProfileDocument:
    return store.load_profile(GPU_PRESET)


@pytest.fixture(scope="session")
def de_2022(grid_table: GridTable) -> GridIntensity:
    return grid_table.lookup("DE-2022")


@pytest.fixture(scope="session")
def renewable(grid_table: GridTable) -> GridIntensity:
    return grid_table.lookup("renewable")


@pytest.fixture
def reporter(store: ProfileStore, grid_table: GridTable) -> Reporter:
    return Reporter(store, grid_table)


@pytest.fixture
def make_scenario() -> Callable[..., Scenario]:
    """
    Build a scenario from a document, an intensity and optional lifetime / paper-compat settings.
    """

    def _make(
        document: ProfileDocument,
        intensity: GridIntensity,
        lifetime: float | None = None,
        paper_compat: bool = False,
    ) -> Scenario:
        return Scenario(
            name=document.system.system_name,
            profile_doc=document,
            intensity=intensity,
            lifetime=LifetimePolicy(service_life=lifetime) if lifetime is not None else None,
            paper_compat=paper_compat,
        )

    return _make


@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture[str]) -> CliRunner:
    """
    Run the CLI against the bundled data directory; returns (exit code, stdout, stderr).
    """

    def _run(*argv: str) -> tuple[int, str, str]:
        code: int = main(["--data-dir", str(bundled_data_path), *argv])
        captured = capsys.readouterr()

        return code, captured.out, captured.err

    return _run
