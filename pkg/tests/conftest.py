"""
Test Configuration
Created by Sergie Code
"""

import os
import shutil
import sys
import tempfile

import pytest

# Repository root on the path so `config` and `src` import
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

CONFIG_DIR = os.path.join(ROOT, 'configs')


@pytest.fixture
def temp_dir():
    """Create a temporary output directory."""
    path = tempfile.mkdtemp()
    yield path
    shutil.rmtree(path, ignore_errors=True)


@pytest.fixture
def config_path():
    """Path of a shipped surface description by name."""
    def _path(name):
        return os.path.join(CONFIG_DIR, f'{name}.json')
    return _path


@pytest.fixture
def enneper():
    from src.expressions.domain import Disk
    from src.surfaces.data import HolomorphicData
    return HolomorphicData('z', '1', Disk(0j, 1.5), name='enneper')


@pytest.fixture
def butterfly():
    from src.expressions.domain import Disk
    from src.surfaces.data import HolomorphicData
    return HolomorphicData('z', 'exp(-i*(z - 1))/z^2', Disk(1 + 0j, 0.5), name='butterfly')


@pytest.fixture
def s1_minus():
    from src.expressions.domain import Disk
    from src.surfaces.data import HolomorphicData
    return HolomorphicData('z', '-i*exp(-i*(z - 1))/z^2', Disk(1 + 0j, 0.5), name='s1_minus')


@pytest.fixture
def circle_2z():
    from src.expressions.domain import Disk
    from src.surfaces.data import HolomorphicData
    return HolomorphicData('2*z', '1', Disk(0j, 1.0), name='circle_2z')


@pytest.fixture
def fold_data():
    from src.expressions.domain import Disk
    from src.surfaces.data import HolomorphicData
    return HolomorphicData('z', 'i/z^2', Disk(1 + 0j, 0.5), name='fold_catenoid')


@pytest.fixture
def cmc_enneper():
    """Holomorphic data run through the constant mean curvature pipeline."""
    from src.expressions.domain import Disk
    from src.surfaces.data import HarmonicData
    return HarmonicData('z', 2.0, Disk(0j, 1.5), omega='1', name='cmc_reduction')
