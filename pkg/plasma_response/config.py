"""
Configuration settings for the plasma response library and CLI.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Settings:
    """Library and command-line settings."""

    # Application identity
    APP_NAME = "plasma_response"
    APP_DESCRIPTION = (
        "Transverse conductivity and permittivity of a degenerate collisional "
        "electron plasma (Mermin, Lindhard and classical models)"
    )
    APP_VERSION = "1.0.0"

    # Concurrency
    WORKERS = 1  # PLASMA_RESPONSE_WORKERS overrides, see get_workers()

    # Logging Configuration
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FILE = os.getenv("LOG_FILE")  # unset: console only
    MAX_LOG_SIZE = 10 * 1024 * 1024  # 10MB
    LOG_BACKUP_COUNT = 5

    # Quadrature
    QUAD_TOL = 1e-12
    QUAD_LIMIT = 2000  # subdivision budget
    ORACLE3D_TOL = 1e-7

    # Kernel evaluation
    BRANCH_TOL = 1e-6
    T0_SERIES_THRESHOLD = 1e-3
    T1_SERIES_RADIUS = 4.0
    SERIES_MAX_TERMS = 80
    Q2_EXCLUSION = 1e-6  # t0_quadrature rejects |q - 2| <= this

    # Figure presets
    FIGURE_X_RANGE = (0.02, 2.0)
    FIGURE_Q_RANGE = (0.05, 2.0)
    FIGURE_POINTS = 100
    FIGURE_12_Q_VALUES = (0.1, 0.25, 0.5)
    FIGURE_12_DEFAULT_Y = 0.1
    FIGURE_3_Y = 0.1
    FIGURE_3_Q = 1.0
    FIGURE_45_Y = 0.01
    FIGURE_45_X = 0.1

    # Sum rule
    SUMRULE_X_MAX = 100.0
    SUMRULE_POINTS = 20000
    SUMRULE_X_MIN = 1e-6

    # Output
    CSV_SIGNIFICANT_DIGITS = 12

    @classmethod
    def get_workers(cls) -> int:
        """Get default worker count from environment or default."""
        workers = os.getenv("PLASMA_RESPONSE_WORKERS")
        if workers:
            return int(workers)
        return cls.WORKERS

    @classmethod
    def validate_config(cls) -> bool:
        """Validate that numeric configuration is usable."""
        invalid = []

        try:
            workers = cls.get_workers()
        except ValueError:
            workers = 0
        if workers < 1:
            invalid.append("PLASMA_RESPONSE_WORKERS")
        if not 0 < cls.QUAD_TOL < 1:
            invalid.append("QUAD_TOL")
        if cls.T1_SERIES_RADIUS <= 1:
            invalid.append("T1_SERIES_RADIUS")

        if invalid:
            raise ValueError(f"Missing or invalid configuration: {', '.join(invalid)}")

        return True


# Create settings instance
settings = Settings()
