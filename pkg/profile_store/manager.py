# standard
import logging
from functools import cached_property
from pathlib import Path

# internal
from profile_store.codec import parse_factor_set, parse_profile
from profile_store.data import resolve_data_dir
from profile_store.grid import load_grid_table
from profile_store.models import (
    FactorSet,
    GridTable,
    ProfileDocument,
)

logger: logging.Logger = logging.getLogger(__name__)

PROFILE_SUFFIX: str = ".yaml"


class ProfileStore:
    def __init__(self, data_dir: str | Path | None = None) -> None:
        """
        Initialize ProfileStore over a data directory (profiles/, factors/, grids.csv).
        """
        self.data_dir: Path = resolve_data_dir(data_dir)
        self.profiles_dir: Path = self.data_dir / "profiles"
        self.factors_dir: Path = self.data_dir / "factors"
        self.grid_table_path: Path = self.data_dir / "grids.csv"

    @cached_property
    def factor_sets(self) -> dict[str, FactorSet]:
        """
        All factor sets of the data directory, keyed by set name.
        """
        factor_sets: dict[str, FactorSet] = {}

        if not self.factors_dir.is_dir():
            return factor_sets

        for path in sorted(self.factors_dir.glob(f"*{PROFILE_SUFFIX}")):
            factor_set: FactorSet = parse_factor_set(path.read_text(encoding="utf-8"))
            factor_sets[factor_set.name] = factor_set
            logger.info("loaded factor set %s from %s", factor_set.name, path)

        return factor_sets

    def index_presets(self) -> list[str]:
        """
        Names of the profile presets in the data directory.
        """
        if not self.profiles_dir.is_dir():
            return []

        return sorted(path.stem for path in self.profiles_dir.glob(f"*{PROFILE_SUFFIX}"))

    def load_factor_set(self, name: str) -> FactorSet:
        factor_set: FactorSet | None = self.factor_sets.get(name)

        if factor_set is None:
            raise FileNotFoundError(f"factor set '{name}' not found under {self.factors_dir}")

        return factor_set

    def profile_path(self, ref: str | Path) -> Path:
        """
        Resolve a profile reference: an existing file path, else a preset name.
        """
        candidate: Path = Path(ref)

        if candidate.is_file():
            return candidate

        preset: Path = self.profiles_dir / f"{ref}{PROFILE_SUFFIX}"

        if preset.is_file():
            return preset

        raise FileNotFoundError(f"profile '{ref}' is neither a file nor a preset under {self.profiles_dir}")

    def load_profile(self, ref: str | Path) -> ProfileDocument:
        path: Path = self.profile_path(ref)
        document: ProfileDocument = parse_profile(path.read_text(encoding="utf-8"), self.factor_sets)
        logger.info("loaded profile %s from %s", document.system.system_name, path)

        return document

    def load_grid_table(self, path: str | Path | None = None) -> GridTable:
        """
        Load a grid table, the data directory's grids.csv unless a path is given.
        """
        table_path: Path = Path(path) if path is not None else self.grid_table_path

        return load_grid_table(table_path.read_text(encoding="utf-8"))
