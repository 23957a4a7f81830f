"""
Configuration management for nctorus-curvature

Handles numerical settings and environment variable loading with validation.
"""

import logging
import os
from dataclasses import dataclass

F_BACKENDS = ("quadrature", "closed")


@dataclass
class AppConfig:
    """Application configuration"""

    quad_tol: float
    f_backend: str
    log_level: str


def get_config() -> AppConfig:
    """Load configuration from environment variables with validation"""

    # Numerical configuration
    quad_tol = float(os.getenv("NCG_QUAD_TOL", "1e-10"))
    f_backend = os.getenv("NCG_F_BACKEND", "quadrature").strip().lower()

    # Logging configuration
    log_level = os.getenv("NCG_LOG_LEVEL", "INFO").strip().upper()

    # Validate configuration
    if not 0 < quad_tol < 1:
        raise ValueError(f"Invalid quadrature tolerance: {quad_tol}")

    if f_backend not in F_BACKENDS:
        raise ValueError(f"Invalid F backend: {f_backend}")

    if not isinstance(logging.getLevelName(log_level), int):
        raise ValueError(f"Invalid log level: {log_level}")

    return AppConfig(quad_tol=quad_tol, f_backend=f_backend, log_level=log_level)
