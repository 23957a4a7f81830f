"""
Tests for configuration loading
"""

import pytest

from nctorus_curvature.config import get_config


class TestConfig:
    """Environment variables and validation"""

    def test_defaults(self, clean_env):
        """Test the defaults without environment variables"""
        config = get_config()
        assert config.quad_tol == 1e-10
        assert config.f_backend == "quadrature"
        assert config.log_level == "INFO"

    def test_overrides(self, clean_env):
        """Test normalization of environment overrides"""
        clean_env.setenv("NCG_QUAD_TOL", "1e-12")
        clean_env.setenv("NCG_F_BACKEND", " Closed ")
        clean_env.setenv("NCG_LOG_LEVEL", "debug")
        config = get_config()
        assert config.quad_tol == 1e-12
        assert config.f_backend == "closed"
        assert config.log_level == "DEBUG"

    @pytest.mark.parametrize("value", ["0", "1.5", "-1e-8"])
    def test_invalid_tolerance(self, clean_env, value):
        """Test rejection of tolerances outside (0, 1)"""
        clean_env.setenv("NCG_QUAD_TOL", value)
        with pytest.raises(ValueError, match="Invalid quadrature tolerance"):
            get_config()

    def test_invalid_backend(self, clean_env):
        """Test rejection of an unknown F backend"""
        clean_env.setenv("NCG_F_BACKEND", "series")
        with pytest.raises(ValueError, match="Invalid F backend: series"):
            get_config()

    def test_invalid_log_level(self, clean_env):
        """Test rejection of an unknown log level"""
        clean_env.setenv("NCG_LOG_LEVEL", "LOUD")
        with pytest.raises(ValueError, match="Invalid log level: LOUD"):
            get_config()
