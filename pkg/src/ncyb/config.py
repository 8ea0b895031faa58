"""
Configuration for ncyb

Suite parameters are validated pydantic models; process-wide knobs come from
NCYB_* environment variables; per-suite defaults ship as YAML.
"""

from functools import lru_cache
from importlib import resources
from typing import Any, Dict, Literal, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from ncyb.utils.exceptions import ConfigurationError

SUITE_NAMES = (
    "quasidet",
    "uqrep",
    "ybmap",
    "classical",
    "poisson",
    "appendixA",
    "appendixB",
    "all",
)

Mode = Literal["symbolic", "numeric", "dual"]


class RuntimeSettings(BaseSettings):
    """Process-wide settings read from the environment"""

    model_config = SettingsConfigDict(env_prefix="NCYB_", extra="ignore")

    threads: int = Field(default=1, ge=1)
    log_level: str = "WARNING"
    max_resamples: int = Field(default=20, ge=1)
    max_n_symbolic: int = Field(default=3, ge=2)
    max_n_numeric: int = Field(default=6, ge=2)
    quantum_max_n: int = Field(default=3, ge=2)


class SuiteConfig(BaseModel):
    """Configuration for one suite run"""

    suite: str
    n: int = 2
    mode: Mode = "numeric"
    seed: int = 0
    trunc_order: int = 12
    samples: int = 20
    output: Optional[str] = None

    @field_validator("suite")
    @classmethod
    def _known_suite(cls, value: str) -> str:
        if value not in SUITE_NAMES:
            raise ValueError(f"unknown suite {value!r}; expected one of {', '.join(SUITE_NAMES)}")
        return value

    @field_validator("n")
    @classmethod
    def _rank(cls, value: int) -> int:
        if value < 2:
            raise ValueError("n must be at least 2")
        return value

    @field_validator("samples")
    @classmethod
    def _samples(cls, value: int) -> int:
        if value < 1:
            raise ValueError("samples must be at least 1")
        return value

    @field_validator("seed")
    @classmethod
    def _seed(cls, value: int) -> int:
        if not 0 <= value < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        return value

    @field_validator("trunc_order")
    @classmethod
    def _trunc(cls, value: int) -> int:
        if value < 2:
            raise ValueError("trunc_order must be at least 2")
        return value

    def echo(self) -> Dict[str, Any]:
        """Config as it appears in reports (output path omitted)"""
        return {
            "suite": self.suite,
            "n": self.n,
            "mode": self.mode,
            "seed": self.seed,
            "trunc_order": self.trunc_order,
            "samples": self.samples,
        }


@lru_cache(maxsize=1)
def load_defaults() -> Dict[str, Dict[str, Any]]:
    """Per-suite defaults from the packaged YAML file"""
    try:
        text = resources.files("ncyb").joinpath("defaults.yaml").read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as e:
        raise ConfigurationError(f"cannot read packaged defaults: {e}") from e
    data = yaml.safe_load(text) or {}
    suites = data.get("suites", {})
    if not isinstance(suites, dict):
        raise ConfigurationError("defaults.yaml: 'suites' must be a mapping")
    return suites


def build_config(suite: str, **overrides: Any) -> SuiteConfig:
    """Merge YAML defaults for `suite` with explicit overrides (None means unset)"""
    base = dict(load_defaults().get(suite, {}))
    base.update({k: v for k, v in overrides.items() if v is not None})
    base["suite"] = suite
    return SuiteConfig(**base)


@lru_cache(maxsize=1)
def get_settings() -> RuntimeSettings:
    return RuntimeSettings()
