# -*- coding: utf-8 -*-
"""Module grouping the run configuration: parameter ranges, the sweep
configuration and its strict JSON parser."""
import json
import math

import numpy as np

from pyvdp.model import Truncation, VdpParams
from pyvdp.steady import initial_truncation
from pyvdp.util.errors import ConfigError, InvalidParameterError

MODES = ('drive-sweep', 'rate-sweep', 'wigner', 'classical', 'figure-preset')

SCALES = ('log', 'linear')

FORMATS = ('csv', 'json')

GRID_KINDS = ('polar', 'cartesian')

#: Parameters a sweep axis may run over.
SWEEP_PARAMETERS = ('omega_drive', 'gamma1_plus', 'gamma1_minus', 'gamma2',
                    'gamma1', 'Gamma1', 'x')

DEFAULT_SWEEP_PARAMETER = {
    'drive-sweep': 'omega_drive',
    'rate-sweep': 'gamma1_minus',
    'classical': 'omega_drive',
    'wigner': 'omega_drive',
}

#: Keys accepted in a configuration document, with their defaults.
DEFAULTS = {
    'mode': None,
    'gamma1_plus': 0.0,
    'gamma1_minus': 0.0,
    'gamma2': 1.0,
    'omega_drive': 0.0,
    'sweep_parameter': None,
    'start': None,
    'stop': None,
    'count': None,
    'scale': 'log',
    'second_parameter': None,
    'second_start': None,
    'second_stop': None,
    'second_count': None,
    'second_scale': 'log',
    'n_levels': None,
    'tail_tol': 1e-6,
    'n_max': 200,
    'tol': 1e-10,
    'chi': True,
    'grid_kind': 'polar',
    'r_max': None,
    'n_radii': 200,
    'n_angles': 256,
    'n_points': 201,
    'preset': None,
    'full_resolution': False,
    'output': None,
    'format': 'csv',
    'workers': 1,
    'strict': False,
}


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


class Range(object):
    """Sampled interval of a single sweep parameter."""

    def __init__(self, parameter, start, stop, count, scale='log',
                 prefix=''):
        """Initialisation.

        Parameters
        ----------
        parameter : str
            Name of the swept parameter.
        start, stop : float
            Endpoints, both included.
        count : int
            Number of points, >= 1. With a single point only `start` is used.
        scale : str
            'log' or 'linear' spacing.
        prefix : str
            Prefix of the configuration keys of this axis, used in error
            messages.

        Raises
        ------
        pyvdp.util.errors.ConfigError
            If the range is empty or a log range has a non-positive endpoint.

        """
        if parameter not in SWEEP_PARAMETERS:
            raise ConfigError(
                "unknown sweep parameter '{}', use one of {}.".format(
                    parameter, ', '.join(SWEEP_PARAMETERS)),
                field=prefix + ('parameter' if prefix else 'sweep_parameter'))
        if scale not in SCALES:
            raise ConfigError("scale should be 'log' or 'linear', got "
                              "'{}'.".format(scale), field=prefix + 'scale')
        if not _is_number(count) or int(count) != count or count < 1:
            raise ConfigError("the range of '{}' is empty; count should be "
                              "an integer >= 1, got {}.".format(parameter,
                                                                 count),
                              field=prefix + 'count')
        for name, value in (('start', start), ('stop', stop)):
            if not _is_number(value) or not math.isfinite(value):
                raise ConfigError("a finite number is required for the "
                                  "range of '{}'.".format(parameter),
                                  field=prefix + name)
        if scale == 'log' and (start <= 0 or stop <= 0):
            raise ConfigError("log ranges require positive endpoints, got "
                              "[{}, {}].".format(start, stop),
                              field=prefix + ('start' if start <= 0
                                              else 'stop'))

        self.parameter = parameter
        self.start = float(start)
        self.stop = float(stop)
        self.count = int(count)
        self.scale = scale

    @property
    def values(self):
        """numpy.ndarray: the sampled parameter values."""
        if self.count == 1:
            return np.array([self.start])
        if self.scale == 'log':
            return np.logspace(math.log10(self.start), math.log10(self.stop),
                               self.count)
        return np.linspace(self.start, self.stop, self.count)

    def __len__(self):
        return self.count

    def __repr__(self):
        return 'Range({!r}, {!r}, {!r}, {!r}, {!r})'.format(
            self.parameter, self.start, self.stop, self.count, self.scale)


def apply_parameter(params, name, value):
    """Return `params` with the sweep parameter `name` set to `value`.

    Besides the VdpParams fields, 'gamma1' and 'Gamma1' keep the other
    combination of the linear rates fixed and 'x' sets Gamma1 through the
    scaled variable x = Gamma1 / gamma2 at the current gamma2.
    """
    if name == 'x':
        return params.replace(Gamma1=value * params.gamma2)
    return params.replace(**{name: value})


class SweepConfig(object):
    """Validated run configuration.

    All keys of `DEFAULTS` are available as attributes.
    """

    def __init__(self, **kwargs):
        """Initialisation.

        Parameters
        ----------
        **kwargs
            Configuration keys, see `DEFAULTS`.

        Raises
        ------
        pyvdp.util.errors.ConfigError
            If a key is unknown or a value is invalid.

        """
        for key in kwargs:
            if key not in DEFAULTS:
                raise ConfigError('unknown key.', field=key)
        values = dict(DEFAULTS)
        values.update(kwargs)
        if values['sweep_parameter'] is None:
            values['sweep_parameter'] = DEFAULT_SWEEP_PARAMETER.get(
                values['mode'])
        self._values = values
        self._validate()

    def __getattr__(self, name):
        try:
            return self.__dict__['_values'][name]
        except KeyError:
            raise AttributeError(name)

    def _require(self, field, kind, minimum=None, allow_none=False,
                 exclusive=False):
        value = self._values[field]
        if value is None:
            if allow_none:
                return
            raise ConfigError('a value is required.', field=field)
        if kind is bool:
            if not isinstance(value, bool):
                raise ConfigError('should be true or false, got {!r}.'.format(
                    value), field=field)
            return
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError('should be a number, got {!r}.'.format(value),
                              field=field)
        if kind is int and int(value) != value:
            raise ConfigError('should be an integer, got {!r}.'.format(
                value), field=field)
        if not math.isfinite(value):
            raise ConfigError('should be finite, got {!r}.'.format(value),
                              field=field)
        if minimum is not None:
            if (exclusive and value <= minimum) or value < minimum:
                raise ConfigError('should be {} {}, got {!r}.'.format(
                    '>' if exclusive else '>=', minimum, value), field=field)

    def _choice(self, field, choices, allow_none=False):
        value = self._values[field]
        if value is None and allow_none:
            return
        if value not in choices:
            raise ConfigError("should be one of {}, got {!r}.".format(
                ', '.join(choices), value), field=field)

    def _validate(self):
        self._choice('mode', MODES)
        for field in ('gamma1_plus', 'gamma1_minus', 'omega_drive'):
            self._require(field, float, 0.)
        self._require('gamma2', float, 0., exclusive=True)
        self._require('n_levels', int, 3, allow_none=True)
        self._require('tail_tol', float, 0., exclusive=True)
        if self.tail_tol >= 1:
            raise ConfigError('should be < 1, got {!r}.'.format(
                self.tail_tol), field='tail_tol')
        self._require('n_max', int, 3)
        self._require('tol', float, 0., exclusive=True)
        self._require('r_max', float, 0., allow_none=True, exclusive=True)
        self._require('n_radii', int, 2)
        self._require('n_angles', int, 3)
        self._require('n_points', int, 2)
        self._require('workers', int, 1)
        for field in ('chi', 'full_resolution', 'strict'):
            self._require(field, bool)
        self._choice('format', FORMATS)
        self._choice('grid_kind', GRID_KINDS)

        try:
            self.params()
        except InvalidParameterError as e:
            raise ConfigError(str(e))

        if self.mode == 'figure-preset':
            if not isinstance(self.preset, str):
                raise ConfigError('a preset name is required.',
                                  field='preset')
        elif self.mode in DEFAULT_SWEEP_PARAMETER:
            params = self.params()
            axes = self.ranges()
            if self.mode == 'classical':
                # classical rates are checked by the classical sweep
                axes = []
            for i, axis in enumerate(axes):
                field = 'second_start' if i else 'start'
                for value in (axis.start, axis.stop):
                    try:
                        apply_parameter(params, axis.parameter, value)
                    except InvalidParameterError as e:
                        raise ConfigError(str(e), field=field)

    def params(self):
        """Fixed model rates of this configuration.

        Returns
        -------
        pyvdp.model.VdpParams
            Rates before the sweep axes are applied.

        """
        return VdpParams(self.gamma1_plus, self.gamma1_minus, self.gamma2,
                         self.omega_drive)

    def ranges(self):
        """Sweep axes of this configuration.

        Returns
        -------
        list of Range
            The primary axis, followed by the second axis if configured.

        """
        if self.mode == 'wigner' and not self.has_range:
            return []
        axes = [Range(self.sweep_parameter, self.start, self.stop,
                      self.count, self.scale)]
        if self.second_parameter is not None:
            if self.second_parameter == self.sweep_parameter:
                raise ConfigError('should differ from sweep_parameter.',
                                  field='second_parameter')
            axes.append(Range(self.second_parameter, self.second_start,
                              self.second_stop, self.second_count,
                              self.second_scale, prefix='second_'))
        return axes

    @property
    def has_range(self):
        """bool: whether a primary sweep axis is configured."""
        return any(self._values[k] is not None
                   for k in ('start', 'stop', 'count'))

    def truncation(self, params):
        """Starting truncation for a sweep point.

        Parameters
        ----------
        params : pyvdp.model.VdpParams
            Rates of the sweep point.

        Returns
        -------
        pyvdp.model.Truncation
            The configured number of levels, or the automatic estimate when
            `n_levels` is null.

        """
        if self.n_levels is None:
            return initial_truncation(params, self.tail_tol, self.n_max)
        return Truncation(self.n_levels, self.tail_tol,
                          max(self.n_max, self.n_levels))

    def as_dict(self):
        """All configuration keys with their effective values."""
        return dict(self._values)

    def replace(self, **kwargs):
        """Copy of this configuration with some keys replaced."""
        values = self.as_dict()
        values.update(kwargs)
        return SweepConfig(**values)

    def __repr__(self):
        return 'SweepConfig({})'.format(', '.join(
            '{}={!r}'.format(k, v) for k, v in sorted(self._values.items())
            if v != DEFAULTS[k]))


def _no_duplicates(pairs):
    result = {}
    for key, value in pairs:
        if key in result:
            raise ConfigError('duplicate key.', field=key)
        result[key] = value
    return result


def _reject_constant(name):
    raise ValueError('non-standard JSON constant {}'.format(name))


def parse_config(text):
    """Parse a run configuration document.

    The document is a flat JSON object. Unknown and duplicate keys are
    rejected, missing keys take the values of `DEFAULTS`.

    Parameters
    ----------
    text : str
        The configuration document.

    Returns
    -------
    SweepConfig
        The validated configuration.

    Raises
    ------
    pyvdp.util.errors.ConfigError
        With the line number for syntax errors and the field name for
        validation errors.

    """
    try:
        document = json.loads(text, object_pairs_hook=_no_duplicates,
                              parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg + '.', line=e.lineno)
    except ValueError as e:
        raise ConfigError(str(e) + '.')

    if not isinstance(document, dict):
        raise ConfigError('the configuration should be a JSON object.',
                          line=1)
    for key, value in document.items():
        if isinstance(value, (dict, list)):
            raise ConfigError('nested values are not supported.', field=key)
    if 'mode' not in document:
        raise ConfigError('a value is required.', field='mode')
    return SweepConfig(**document)
