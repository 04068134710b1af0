"""
Unit tests for Config.

Tests environment overrides, YAML profiles and validation of the
configuration sections.
"""

import pytest
from pydantic import ValidationError

from thompx.core.config import Config, get_config, reload_config
from thompx.core.errors import ErrorCode, TableError, ThompxError


class TestConfigBasic:
    """Test defaults and environment overrides."""

    def test_defaults(self):
        """Test sections load with their documented defaults."""
        config = Config()

        assert config.algebra.default_arity == 2
        assert config.runtime.jobs == 1
        assert config.search.max_radius == 12
        assert config.logging.level == "INFO"

    def test_env_override(self, monkeypatch):
        """Test THOMPX_* variables reach their section."""
        monkeypatch.setenv("THOMPX_SEED", "7")
        monkeypatch.setenv("THOMPX_FRONTIER_LIMIT", "500")
        monkeypatch.setenv("THOMPX_SUITE_FRONTIER_LIMIT", "800")

        config = Config()

        assert config.runtime.seed == 7
        assert config.search.frontier_limit == 500
        assert config.search.suite_frontier_limit == 800

    def test_env_file(self, tmp_path):
        """Test an explicit .env file is read by every section."""
        env_file = tmp_path / "local.env"
        env_file.write_text("THOMPX_SEED=5\nTHOMPX_DEBUG_SLICES=true\n")

        config = reload_config(env_file=str(env_file))

        assert config.runtime.seed == 5
        assert config.synthesis.debug_slices is True

    def test_invalid_arity_rejected(self, monkeypatch):
        """Test arity outside 2..10 fails validation."""
        monkeypatch.setenv("THOMPX_ARITY", "11")

        with pytest.raises(ValidationError):
            Config()

    def test_jobs_zero_rejected(self, monkeypatch):
        """Test jobs=0 is neither -1 nor positive."""
        monkeypatch.setenv("THOMPX_JOBS", "0")

        with pytest.raises(ValidationError):
            Config()

    def test_get_config_is_cached(self):
        """Test get_config returns the same instance until reload."""
        first = get_config()

        assert get_config() is first
        assert reload_config() is not first


class TestConfigProfiles:
    """Test update() and YAML round trips."""

    def test_update_merges_fields(self):
        """Test update keeps untouched fields."""
        config = Config().update({"synthesis": {"toffoli_cap": 40}})

        assert config.synthesis.toffoli_cap == 40
        assert config.synthesis.fredkin_cap == 24

    def test_update_unknown_section(self):
        """Test an unknown section raises ValueError."""
        with pytest.raises(ValueError, match="Unknown configuration section"):
            Config().update({"plotting": {}})

    def test_update_unknown_field(self):
        """Test an unknown field raises ValueError."""
        with pytest.raises(ValueError, match="Unknown fields"):
            Config().update({"search": {"depth": 3}})

    def test_yaml_round_trip(self, tmp_path):
        """Test to_yaml output loads back as a profile."""
        path = tmp_path / "profile.yaml"
        Config().update({"runtime": {"seed": 99}}).to_yaml(path)

        loaded = reload_config(profile=path)

        assert loaded.runtime.seed == 99
        assert get_config() is loaded

    def test_missing_profile(self, tmp_path):
        """Test a missing YAML file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            Config.from_yaml(tmp_path / "absent.yaml")


class TestErrors:
    """Test the error hierarchy."""

    def test_message_carries_code(self):
        """Test str() starts with the stable error name."""
        error = TableError(ErrorCode.NOT_INVERTIBLE, "image is not a code")

        assert str(error) == "NOT_INVERTIBLE: image is not a code"
        assert error.code is ErrorCode.NOT_INVERTIBLE

    def test_is_value_error(self):
        """Test domain errors can be caught as ValueError."""
        with pytest.raises(ValueError):
            raise TableError(ErrorCode.EMPTY_COMPOSITE, "empty")

        assert issubclass(TableError, ThompxError)
