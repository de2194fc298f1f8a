from __future__ import annotations

import os
import logging
from pathlib import Path

from pydantic import BaseModel, Field, model_validator

APP_NAME = "MayaChains"
APP_AUTHOR = "TamerOnLine"

# -----------------------------------------------------------------------------
# Logging
# -----------------------------------------------------------------------------
logger = logging.getLogger("mayachains")
if not logger.handlers:
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("[%(levelname)s] mayachains: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if os.getenv("MAYACHAINS_DEBUG") else logging.INFO)


def get_data_dirs() -> tuple[Path, Path]:
    """
    Return the paths for the base data directory and its 'outputs' directory.

    Priority:
    1. Environment variable MAYACHAINS_DATA_DIR (if set)
    2. './data' in the current working directory

    Returns:
        tuple[Path, Path]: The data directory and the outputs directory.
    """
    base = Path(os.getenv("MAYACHAINS_DATA_DIR", Path.cwd() / "data")).resolve()
    outputs = base / "outputs"
    outputs.mkdir(parents=True, exist_ok=True)

    if os.getenv("MAYACHAINS_DEBUG"):
        logger.debug(f"Data: {base}")
        logger.debug(f"Outputs: {outputs}")

    return base, outputs


class Settings(BaseModel):
    """Numerical knobs shared by the CLI and the API."""

    precision: int = Field(128, ge=53)
    max_precision: int = Field(1024, ge=53)
    max_iterations: int = Field(400, ge=1)
    interpolation_degree: int = Field(12, ge=1)
    debug: bool = False

    @model_validator(mode="after")
    def _check_ceiling(self) -> "Settings":
        if self.max_precision < self.precision:
            raise ValueError(
                f"max_precision ({self.max_precision}) is below precision ({self.precision})"
            )
        return self


_ENV_FIELDS = {
    "precision": "MAYACHAINS_PRECISION",
    "max_precision": "MAYACHAINS_MAX_PRECISION",
    "max_iterations": "MAYACHAINS_MAX_ITERATIONS",
    "interpolation_degree": "MAYACHAINS_INTERP_DEGREE",
}


def get_settings() -> Settings:
    """
    Build the settings from the environment.

    Values are read on every call so a changed environment is picked up
    without a restart. Unset variables fall back to the model defaults.

    Raises:
        pydantic.ValidationError: if a variable is not a valid integer or
            violates a bound.
    """
    values: dict[str, object] = {
        field: os.environ[env] for field, env in _ENV_FIELDS.items() if env in os.environ
    }
    values["debug"] = bool(os.getenv("MAYACHAINS_DEBUG"))
    return Settings.model_validate(values)
