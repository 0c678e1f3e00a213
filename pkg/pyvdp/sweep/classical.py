# -*- coding: utf-8 -*-
"""Module containing the sweep class over the classical steady state."""
import itertools
import math

from ..analytic import ClassicalParams
from ..types.rows import ClassicalRow
from ..util.errors import ConfigError, InvalidParameterError
from .abstract import AbstractSweep

#: Parameters of the classical model a classical sweep may run over.
CLASSICAL_PARAMETERS = ('omega_drive', 'gamma1', 'gamma2', 'x')


def scaled_gain(p):
    """Scaled variable x = gamma1 / (gamma2**(1/3) Omega**(2/3)), NaN
    without drive."""
    if p.omega_drive == 0:
        return math.nan
    return p.gamma1 / (p.gamma2 ** (1. / 3.) * p.omega_drive ** (2. / 3.))


class ClassicalSweep(AbstractSweep):
    """Sweep of the closed-form classical steady state.

    The swept parameter is one of the classical parameters or the scaled
    variable x. An x sweep keeps gamma2 and the drive fixed and sets gamma1
    accordingly; a configuration without drive uses Omega = gamma2.
    """

    mode = 'classical'

    def __init__(self, rowtype=ClassicalRow, name=None):
        """Initialisation.

        Parameters
        ----------
        rowtype : subclass of pyvdp.types.abstract.AbstractRowType
            Reference to a class representing the rows of this sweep.
            Optional: defaults to the ClassicalRow type.
        name : str, optional
            Dataset name, defaults to 'classical'.

        """
        super(ClassicalSweep, self).__init__(rowtype, name)

    @staticmethod
    def _classical_points(config):
        """Classical parameters and scaled gains of every point."""
        p = config.params()
        base = {'gamma1': p.gamma1, 'gamma2': p.gamma2,
                'omega_drive': p.omega_drive}
        axes = config.ranges()
        for axis in axes:
            if axis.parameter not in CLASSICAL_PARAMETERS:
                raise ConfigError(
                    "classical sweeps run over one of {}, got '{}'.".format(
                        ', '.join(CLASSICAL_PARAMETERS), axis.parameter),
                    field='sweep_parameter')

        points = []
        for values in itertools.product(*[a.values for a in axes]):
            kwargs = dict(base)
            x = None
            for axis, value in zip(axes, values):
                if axis.parameter == 'x':
                    x = float(value)
                else:
                    kwargs[axis.parameter] = float(value)
            if x is not None:
                if kwargs['omega_drive'] == 0:
                    kwargs['omega_drive'] = kwargs['gamma2']
                kwargs['gamma1'] = x * kwargs['gamma2'] ** (1. / 3.) * \
                    kwargs['omega_drive'] ** (2. / 3.)
            try:
                params = ClassicalParams(**kwargs)
            except InvalidParameterError as e:
                raise ConfigError(str(e), field='start')
            points.append((params, scaled_gain(params) if x is None else x))
        return points

    def points(self, config):
        return [self._type(i, params, x=x) for i, (params, x) in
                enumerate(self._classical_points(config))]

    def _rows_from(self, points):
        return [self._type(i, p, x=scaled_gain(p))
                for i, p in enumerate(points)]
