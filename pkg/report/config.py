# standard
import os

# third-party
from dotenv import load_dotenv

load_dotenv()

default_grid_label: str = os.getenv("COMPUTE_CARBON_GRID", "DE-2022")

__all__ = [
    "default_grid_label",
]
