# standard
import os
from pathlib import Path

# third-party
from dotenv import load_dotenv

load_dotenv()

DATA_DIR_ENV: str = "COMPUTE_CARBON_DATA"

bundled_data_path: Path = Path(__file__).resolve().parent


def resolve_data_dir(override: str | Path | None = None) -> Path:
    """
    Resolve the data directory: explicit override, then COMPUTE_CARBON_DATA, then the bundled presets.
    """
    if override is not None:
        return Path(override)

    data_dir_env: str | None = os.getenv(DATA_DIR_ENV, None)

    return Path(data_dir_env) if data_dir_env else bundled_data_path


__all__ = [
    "DATA_DIR_ENV",
    "bundled_data_path",
    "resolve_data_dir",
]
