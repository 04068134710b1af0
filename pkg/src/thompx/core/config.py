"""
Configuration Management for ThompX

Provides centralized configuration loading from environment variables,
.env files and YAML profiles.
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from loguru import logger
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class AlgebraConfig(BaseSettings):
    """Table algebra configuration"""

    default_arity: int = Field(default=2, alias="THOMPX_ARITY")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore", populate_by_name=True
    )

    @field_validator("default_arity")
    @classmethod
    def validate_arity(cls, v: int) -> int:
        """Letters are single digits, so 2 <= k <= 10"""
        if not 2 <= v <= 10:
            raise ValueError(f"Arity must be between 2 and 10, got {v}")
        return v


class SynthesisConfig(BaseSettings):
    """Reversible synthesis and compiler configuration"""

    toffoli_cap: int = Field(default=16, alias="THOMPX_TOFFOLI_CAP")
    fredkin_cap: int = Field(default=24, alias="THOMPX_FREDKIN_CAP")
    pair_cap: int = Field(default=12, alias="THOMPX_PAIR_CAP")
    debug_slices: bool = Field(default=False, alias="THOMPX_DEBUG_SLICES")
    debug_slice_max_inputs: int = Field(default=10, alias="THOMPX_DEBUG_SLICE_MAX_INPUTS")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore", populate_by_name=True
    )

    @field_validator("toffoli_cap", "fredkin_cap", "pair_cap", "debug_slice_max_inputs")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Caps must be positive"""
        if v < 1:
            raise ValueError(f"Cap must be positive, got {v}")
        return v


class SearchConfig(BaseSettings):
    """Breadth-first search and brute-force oracle limits"""

    frontier_limit: int = Field(default=1_000_000, alias="THOMPX_FRONTIER_LIMIT")
    suite_frontier_limit: int = Field(default=20_000, alias="THOMPX_SUITE_FRONTIER_LIMIT")
    max_radius: int = Field(default=12, alias="THOMPX_MAX_RADIUS")
    circuit_cap: int = Field(default=14, alias="THOMPX_CIRCUIT_CAP")
    max_live_wires: int = Field(default=6, alias="THOMPX_MAX_LIVE")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore", populate_by_name=True
    )


class RuntimeConfig(BaseSettings):
    """Reproducibility and parallelism"""

    seed: int = Field(default=0, alias="THOMPX_SEED")
    jobs: int = Field(default=1, alias="THOMPX_JOBS")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore", populate_by_name=True
    )

    @field_validator("jobs")
    @classmethod
    def validate_jobs(cls, v: int) -> int:
        """joblib accepts -1 for all cores, otherwise a positive count"""
        if v == 0 or v < -1:
            raise ValueError(f"jobs must be -1 or positive, got {v}")
        return v


class LoggingConfig(BaseSettings):
    """Logging configuration"""

    level: str = Field(default="INFO", alias="LOG_LEVEL")
    file: Optional[str] = Field(default=None, alias="LOG_FILE")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore", populate_by_name=True
    )


class Config:
    """
    Main configuration class

    Aggregates all configuration sections and provides easy access.
    """

    SECTIONS = ("algebra", "synthesis", "search", "runtime", "logging")

    def __init__(self, env_file: Optional[str] = None) -> None:
        """
        Initialize configuration

        Args:
            env_file: Path to .env file (defaults to .env in current directory)
        """
        overrides: Dict[str, Any] = {"_env_file": env_file} if env_file else {}
        self.algebra = AlgebraConfig(**overrides)
        self.synthesis = SynthesisConfig(**overrides)
        self.search = SearchConfig(**overrides)
        self.runtime = RuntimeConfig(**overrides)
        self.logging = LoggingConfig(**overrides)

        logger.debug("Configuration loaded: {}", self.to_dict())

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {name: getattr(self, name).model_dump() for name in self.SECTIONS}

    def update(self, updates: Dict[str, Any]) -> "Config":
        """
        Override sections from a nested dictionary

        Args:
            updates: Mapping section -> {field: value}

        Returns:
            self, for chaining

        Raises:
            ValueError: If a section or field is unknown
        """
        for section, values in updates.items():
            if section not in self.SECTIONS:
                raise ValueError(f"Unknown configuration section '{section}'")
            current = getattr(self, section)
            merged = {**current.model_dump(), **(values or {})}
            unknown = set(merged) - set(type(current).model_fields)
            if unknown:
                raise ValueError(f"Unknown fields in '{section}': {sorted(unknown)}")
            setattr(self, section, type(current)(**merged))
        return self

    @classmethod
    def from_yaml(cls, config_path: Union[str, Path]) -> "Config":
        """
        Load configuration from a YAML profile on top of the environment

        Args:
            config_path: Path to YAML file

        Returns:
            Config instance
        """
        config_path = Path(config_path)
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        with open(config_path, "r") as f:
            config_dict = yaml.safe_load(f) or {}

        logger.info("Loading configuration profile {}", config_path)
        return cls().update(config_dict)

    def to_yaml(self, output_path: Union[str, Path]) -> None:
        """Save configuration to YAML file"""
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)

        with open(output_path, "w") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False)


# Global configuration instance
_config: Optional[Config] = None


def get_config() -> Config:
    """
    Get global configuration instance

    Returns:
        Config instance
    """
    global _config
    if _config is None:
        _config = Config()
    return _config


def reload_config(
    env_file: Optional[str] = None, profile: Optional[Union[str, Path]] = None
) -> Config:
    """
    Reload configuration

    Args:
        env_file: Path to environment file
        profile: Optional YAML profile applied on top

    Returns:
        New Config instance
    """
    global _config
    _config = Config.from_yaml(profile) if profile else Config(env_file=env_file)
    return _config
