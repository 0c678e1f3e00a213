"""Module grouping tests for the pyvdp.util.config module."""

import numpy as np
import pytest

from pyvdp.model import VdpParams
from pyvdp.util.config import (
    Range,
    SweepConfig,
    apply_parameter,
    parse_config,
)
from pyvdp.util.errors import ConfigError


def config_error(text):
    """Parse `text` and return the raised ConfigError."""
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    return excinfo.value


class TestParseConfig(object):
    """Class grouping tests for pyvdp.util.config.parse_config."""

    def test_valid(self):
        """Test a complete drive sweep configuration."""
        config = parse_config(
            '{"mode": "drive-sweep", "gamma1_minus": 0.02, "start": 0.001, '
            '"stop": 0.3, "count": 11, "scale": "log", "chi": false}')
        assert config.mode == 'drive-sweep'
        assert config.gamma1_minus == 0.02
        assert config.chi is False
        assert config.sweep_parameter == 'omega_drive'

    def test_defaults(self):
        """Test the defaults of omitted keys."""
        config = parse_config('{"mode": "wigner"}')
        assert config.gamma2 == 1.0
        assert config.tail_tol == 1e-6
        assert config.n_max == 200
        assert config.tol == 1e-10
        assert config.workers == 1
        assert config.format == 'csv'
        assert config.n_levels is None

    def test_duplicate_key(self):
        """Test whether duplicate keys are rejected."""
        error = config_error('{"mode": "wigner", "gamma2": 1, "gamma2": 2}')
        assert error.field == 'gamma2'

    def test_syntax_error(self):
        """Test that syntax errors report their line."""
        error = config_error('{\n"mode": "wigner",\n"gamma2" 1\n}')
        assert error.line == 3
        assert 'line 3' in str(error)

    def test_nan(self):
        """Test whether non-standard JSON constants are rejected."""
        config_error('{"mode": "wigner", "gamma2": NaN}')

    def test_not_an_object(self):
        """Test whether a document other than an object is rejected."""
        config_error('[1, 2]')

    def test_nested(self):
        """Test whether nested values are rejected."""
        error = config_error('{"mode": "wigner", "gamma2": {"value": 1}}')
        assert error.field == 'gamma2'

    def test_missing_mode(self):
        """Test that the mode is required."""
        assert config_error('{"gamma2": 1}').field == 'mode'

    def test_unknown_key(self):
        """Test whether unknown keys are rejected."""
        error = config_error('{"mode": "wigner", "detuning": 1}')
        assert error.field == 'detuning'
        assert 'detuning' in str(error)

    @pytest.mark.parametrize('document,field', [
        ({'count': 0}, 'count'),
        ({'gamma2': -1.}, 'gamma2'),
        ({'start': 0.}, 'start'),
        ({'stop': -1.}, 'stop'),
        ({'scale': 'cubic'}, 'scale'),
        ({'sweep_parameter': 'detuning'}, 'sweep_parameter'),
        ({'second_parameter': 'gamma2', 'second_start': 1.,
          'second_stop': 2., 'second_count': 0}, 'second_count'),
        ({'n_levels': 2}, 'n_levels'),
        ({'tail_tol': 1.5}, 'tail_tol'),
        ({'workers': 0}, 'workers'),
        ({'chi': 1}, 'chi'),
        ({'format': 'xml'}, 'format'),
        ({'omega_drive': 'strong'}, 'omega_drive')])
    def test_invalid_field(self, drive_config, document, field):
        """Test that validation errors name the offending key.

        Parameters
        ----------
        drive_config : pytest.fixture providing
                       pyvdp.util.config.SweepConfig
            Valid drive sweep configuration.
        document : dict
            Keys replacing the valid ones.
        field : str
            Expected name of the offending key.

        """
        with pytest.raises(ConfigError) as excinfo:
            drive_config.replace(**document)
        assert excinfo.value.field == field

    def test_swept_rate_checked(self):
        """Test that the sweep endpoints must give valid rates."""
        with pytest.raises(ConfigError) as excinfo:
            SweepConfig(mode='rate-sweep', sweep_parameter='gamma1',
                        start=-2., stop=1., count=3, scale='linear',
                        gamma1_plus=1.)
        assert excinfo.value.field == 'start'


class TestRange(object):
    """Class grouping tests for pyvdp.util.config.Range."""

    def test_log(self):
        """Test logarithmic spacing."""
        values = Range('omega_drive', 0.01, 1., 3).values
        assert np.allclose(values, [0.01, 0.1, 1.])

    def test_linear(self):
        """Test linear spacing with both endpoints."""
        r = Range('gamma1_minus', 0., 1., 5, scale='linear')
        assert list(r.values) == [0., 0.25, 0.5, 0.75, 1.]
        assert len(r) == 5

    def test_single_point(self):
        """Test that a single point uses the start value."""
        assert list(Range('omega_drive', 0.5, 2., 1).values) == [0.5]

    def test_prefix(self):
        """Test that errors of a second axis name its keys."""
        with pytest.raises(ConfigError) as excinfo:
            Range('gamma2', 0., 1., 3, prefix='second_')
        assert excinfo.value.field == 'second_start'


class TestSweepConfig(object):
    """Class grouping tests for pyvdp.util.config.SweepConfig."""

    def test_ranges(self, drive_config):
        """Test the configured axes.

        Parameters
        ----------
        drive_config : pytest.fixture providing
                       pyvdp.util.config.SweepConfig
            Valid drive sweep configuration.

        """
        axes = drive_config.ranges()
        assert len(axes) == 1
        assert axes[0].parameter == 'omega_drive'
        assert np.allclose(axes[0].values, [0.01, 0.1, 1.])

    def test_second_axis(self, drive_config):
        """Test a second sweep axis.

        Parameters
        ----------
        drive_config : pytest.fixture providing
                       pyvdp.util.config.SweepConfig
            Valid drive sweep configuration.

        """
        config = drive_config.replace(second_parameter='gamma1_plus',
                                      second_start=0., second_stop=1.,
                                      second_count=2, second_scale='linear')
        axes = config.ranges()
        assert [a.parameter for a in axes] == ['omega_drive', 'gamma1_plus']

    def test_same_axis_twice(self, drive_config):
        """Test whether sweeping one parameter on both axes is rejected.

        Parameters
        ----------
        drive_config : pytest.fixture providing
                       pyvdp.util.config.SweepConfig
            Valid drive sweep configuration.

        """
        with pytest.raises(ConfigError) as excinfo:
            drive_config.replace(second_parameter='omega_drive',
                                 second_start=1., second_stop=2.,
                                 second_count=2)
        assert excinfo.value.field == 'second_parameter'

    def test_wigner_without_range(self):
        """Test that a wigner configuration may omit the range."""
        config = SweepConfig(mode='wigner', omega_drive=0.5)
        assert config.ranges() == []
        assert not config.has_range

    def test_preset_required(self):
        """Test that the figure-preset mode needs a preset name."""
        with pytest.raises(ConfigError) as excinfo:
            SweepConfig(mode='figure-preset')
        assert excinfo.value.field == 'preset'

    def test_truncation(self, drive_config):
        """Test the starting truncation.

        Parameters
        ----------
        drive_config : pytest.fixture providing
                       pyvdp.util.config.SweepConfig
            Valid drive sweep configuration.

        """
        params = drive_config.params()
        assert drive_config.truncation(params).n_levels == 15
        fixed = drive_config.replace(n_levels=40, n_max=30)
        trunc = fixed.truncation(params)
        assert trunc.n_levels == 40
        assert trunc.n_max == 40

    def test_apply_parameter(self):
        """Test the derived sweep parameters."""
        params = VdpParams(3., 1., 2.)
        assert apply_parameter(params, 'x', 5.).Gamma1 == 10.
        assert apply_parameter(params, 'gamma1', 0.).gamma1_plus == 2.
        assert apply_parameter(params, 'omega_drive', 0.1).omega_drive == 0.1

    def test_repr(self, drive_config):
        """Test that the repr only lists non-default keys.

        Parameters
        ----------
        drive_config : pytest.fixture providing
                       pyvdp.util.config.SweepConfig
            Valid drive sweep configuration.

        """
        text = repr(drive_config)
        assert "mode='drive-sweep'" in text
        assert 'gamma2' not in text
