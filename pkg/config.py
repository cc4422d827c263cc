"""
Configuration settings for SurfLab
Created by Sergie Code

Numerical tolerances and output locations. Every value can be overridden
through an environment variable of the same name.
"""

import os


def _float(name, default):
    return float(os.environ.get(name, default))


def _int(name, default):
    return int(os.environ.get(name, default))


class Config:
    """Base configuration class."""

    # Zero tests
    ZERO_TOLERANCE = _float('ZERO_TOLERANCE', 1e-9)
    GUARD_BAND_FACTOR = _float('GUARD_BAND_FACTOR', 10.0)
    ON_SET_TOLERANCE = _float('ON_SET_TOLERANCE', 1e-8)
    PROJECTION_TOLERANCE = _float('PROJECTION_TOLERANCE', 1e-12)

    # Wirtinger kernel
    JET_ORDER = _int('JET_ORDER', 3)
    DIVISION_THRESHOLD = _float('DIVISION_THRESHOLD', 1e-300)
    BRANCH_CUT_TOLERANCE = _float('BRANCH_CUT_TOLERANCE', 1e-12)
    FD_STEP = _float('FD_STEP', 1e-3)

    # Quadrature
    QUADRATURE_TOLERANCE = _float('QUADRATURE_TOLERANCE', 1e-12)
    QUADRATURE_NODES = _int('QUADRATURE_NODES', 15)
    QUADRATURE_MAX_DEPTH = _int('QUADRATURE_MAX_DEPTH', 40)

    # Sampling checks
    VALIDATION_GRID = _int('VALIDATION_GRID', 64)
    CLOSEDNESS_TOLERANCE = _float('CLOSEDNESS_TOLERANCE', 1e-6)
    CLOSEDNESS_SAMPLES = _int('CLOSEDNESS_SAMPLES', 9)

    # Singular curve tracing
    TRACE_STEP = _float('TRACE_STEP', 0.02)
    TRACE_MAX_STEPS = _int('TRACE_MAX_STEPS', 2000)
    NEWTON_MAX_ITERATIONS = _int('NEWTON_MAX_ITERATIONS', 50)
    NEWTON_POLISH_STEPS = _int('NEWTON_POLISH_STEPS', 2)
    FD_RELATIVE_STEP = _float('FD_RELATIVE_STEP', 1e-4)

    # Fold test
    FOLD_GRID = _int('FOLD_GRID', 21)
    FOLD_HALFWIDTH = _float('FOLD_HALFWIDTH', 0.05)
    FOLD_TOLERANCE = _float('FOLD_TOLERANCE', 1e-8)
    FOLD_SUBSTEPS = _int('FOLD_SUBSTEPS', 4)

    # Output
    OUTPUT_FOLDER = os.environ.get('OUTPUT_FOLDER') or 'output'
    FLOAT_FORMAT = '.17g'

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'

    @classmethod
    def guard_band(cls):
        return cls.ZERO_TOLERANCE * cls.GUARD_BAND_FACTOR


class DevelopmentConfig(Config):
    """Development configuration."""
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    OUTPUT_FOLDER = 'test_output'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'default': Config
}


def active_config():
    """Return the configuration class selected by SURFLAB_ENV."""
    return config.get(os.environ.get('SURFLAB_ENV', 'default'), Config)
