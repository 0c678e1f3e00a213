"""Module grouping session scoped PyTest fixtures."""

import json

import pytest

import pyvdp
from pyvdp.model import DensityMatrix, VdpParams
from pyvdp.util.config import SweepConfig
from pyvdp.util.hooks import Hooks


def pytest_runtest_setup():
    pyvdp.hooks = Hooks()


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: mark test solving truncations of 100+ levels")


@pytest.fixture
def damped_params():
    """PyTest fixture providing a weakly driven, damped parameter set.

    Returns
    -------
    pyvdp.model.VdpParams
        Rates gamma1_plus = 0.5, gamma1_minus = 1, gamma2 = 1, Omega = 0.3.

    """
    return VdpParams(0.5, 1.0, 1.0, 0.3)


@pytest.fixture
def coherent_state():
    """PyTest fixture providing a truncated coherent state.

    Returns
    -------
    pyvdp.model.DensityMatrix
        |alpha><alpha| with alpha = 0.5 in 20 levels.

    """
    return DensityMatrix.coherent(0.5, 20)


@pytest.fixture
def drive_config():
    """PyTest fixture providing a small drive sweep configuration.

    Returns
    -------
    pyvdp.util.config.SweepConfig
        Three drives between 0.01 and 1 at gamma1_minus = 1.

    """
    return SweepConfig(mode='drive-sweep', gamma1_minus=1.0, start=0.01,
                       stop=1.0, count=3)


@pytest.fixture
def write_config(tmp_path):
    """PyTest fixture returning a function that writes a configuration
    document to a temporary file.

    Parameters
    ----------
    tmp_path : pathlib.Path
        PyTest temporary directory.

    Returns
    -------
    function
        Called with a dict (dumped as JSON) or a str (written as is),
        returns the path of the file as str.

    """
    def write(document, name='config.json'):
        path = tmp_path / name
        if not isinstance(document, str):
            document = json.dumps(document)
        path.write_text(document, encoding='utf-8')
        return str(path)
    return write
