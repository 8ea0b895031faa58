"""
Tests for configuration
"""

import pytest
from pydantic import ValidationError

from ncyb.config import SUITE_NAMES, RuntimeSettings, SuiteConfig, build_config, load_defaults


class TestSuiteConfig:
    """Test suite configuration"""

    def test_defaults(self):
        """Test model defaults"""
        config = SuiteConfig(suite="quasidet")

        assert config.n == 2
        assert config.mode == "numeric"
        assert config.seed == 0
        assert config.output is None

    def test_unknown_suite_rejected(self):
        """Test unknown suite names are rejected"""
        with pytest.raises(ValidationError, match="unknown suite"):
            SuiteConfig(suite="nosuch")

    @pytest.mark.parametrize(
        "field,value",
        [("n", 1), ("samples", 0), ("seed", -1), ("seed", 2**64), ("trunc_order", 1)],
    )
    def test_out_of_range_rejected(self, field, value):
        """Test range validation"""
        with pytest.raises(ValidationError):
            SuiteConfig(suite="quasidet", **{field: value})

    def test_bad_mode_rejected(self):
        """Test mode must be one of the scalar modes"""
        with pytest.raises(ValidationError):
            SuiteConfig(suite="quasidet", mode="float")

    def test_echo_omits_output(self):
        """Test echoed config leaves out the output path"""
        echo = SuiteConfig(suite="ybmap", output="r.json").echo()

        assert "output" not in echo
        assert echo["suite"] == "ybmap"


class TestBuildConfig:
    """Test YAML defaults merged with overrides"""

    def test_every_suite_has_defaults(self):
        """Test packaged defaults cover every suite"""
        assert set(load_defaults()) == set(SUITE_NAMES)

    def test_yaml_defaults_applied(self):
        """Test suite defaults come from YAML"""
        config = build_config("quasidet")

        assert config.n == 4
        assert config.samples == 200

    def test_overrides_win_and_none_is_unset(self):
        """Test explicit overrides replace defaults, None leaves them"""
        config = build_config("quasidet", n=3, seed=9, samples=None)

        assert config.n == 3
        assert config.seed == 9
        assert config.samples == 200

    def test_poisson_runs_dual(self):
        """Test the Poisson suite defaults to dual mode"""
        assert build_config("poisson").mode == "dual"


class TestRuntimeSettings:
    """Test environment settings"""

    def test_defaults(self, monkeypatch):
        """Test settings defaults"""
        monkeypatch.delenv("NCYB_THREADS", raising=False)
        settings = RuntimeSettings()

        assert settings.threads == 1
        assert settings.max_resamples == 20
        assert settings.max_n_symbolic == 3

    def test_environment_prefix(self, monkeypatch):
        """Test NCYB_ variables are read"""
        monkeypatch.setenv("NCYB_THREADS", "4")
        monkeypatch.setenv("NCYB_MAX_RESAMPLES", "5")

        settings = RuntimeSettings()

        assert settings.threads == 4
        assert settings.max_resamples == 5

    def test_invalid_environment_rejected(self, monkeypatch):
        """Test bad environment values fail validation"""
        monkeypatch.setenv("NCYB_THREADS", "0")

        with pytest.raises(ValidationError):
            RuntimeSettings()
