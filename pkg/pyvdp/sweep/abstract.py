# -*- coding: utf-8 -*-
"""Module containing the base sweep class."""
import itertools

from pyvdp.util.config import apply_parameter
from pyvdp.util.errors import ConfigError, InvalidParameterError
from pyvdp.util.hooks import HookRunner
from pyvdp.util.output import Dataset

#: Solver settings recorded in the header of every dataset.
PINNED_KEYS = ('n_levels', 'tail_tol', 'n_max', 'tol')


class AbstractSweep(object):
    """Abstract sweep class grouping methods common to all sweep modes.
    Not to be instantiated or used directly."""

    #: Configuration mode handled by this sweep.
    mode = None

    def __init__(self, rowtype, name=None):
        """Initialisation.

        Parameters
        ----------
        rowtype : subclass of pyvdp.types.abstract.AbstractRowType
            Row type of the datasets of this sweep.
        name : str, optional
            Dataset name, defaults to the mode.

        """
        self._type = rowtype
        self.name = name or self.mode
        self.rows = []
        self.n_failures = 0

    def get_fields(self):
        """Return the column definitions of the datasets of this sweep.

        Returns
        -------
        collections.OrderedDict
            Ordered dictionary mapping the column name to its field.

        """
        return self._type.get_fields()

    def _pre_sweep_validation(self, config):
        if config.mode != self.mode:
            raise ConfigError("a {} sweep cannot run a '{}' "
                              "configuration.".format(self.mode, config.mode),
                              field='mode')

    def _parameter_points(self, config):
        """Model rates of every sweep point, in dataset order.

        With two axes the first axis varies slowest.
        """
        base = config.params()
        axes = config.ranges()
        points = []
        for values in itertools.product(*[a.values for a in axes]):
            params = base
            for axis, value in zip(axes, values):
                try:
                    params = apply_parameter(params, axis.parameter,
                                             float(value))
                except InvalidParameterError as e:
                    raise ConfigError(str(e), field=axis.parameter)
            points.append(params)
        return points

    def points(self, config):
        """Rows to solve for `config`.

        Parameters
        ----------
        config : pyvdp.util.config.SweepConfig
            Run configuration.

        Returns
        -------
        list of pyvdp.types.abstract.AbstractRowType
            Unsolved rows, in dataset order.

        """
        return self._rows_from(self._parameter_points(config))

    def _rows_from(self, points):
        return [self._type(i, p) for i, p in enumerate(points)]

    def sweep(self, config, points=None, workers=None, strict=None):
        """Solve every point and return the dataset as a DataFrame.

        Parameters
        ----------
        config : pyvdp.util.config.SweepConfig
            Run configuration.
        points : list, optional
            Explicit parameter points replacing the ranges of `config`,
            instances of pyvdp.model.VdpParams (ClassicalParams for
            classical sweeps).
        workers : int, optional
            Number of worker threads. Defaults to ``config.workers``.
        strict : bool, optional
            Abort at the first failing point. Defaults to ``config.strict``.

        Returns
        -------
        pandas.DataFrame
            One row per point in parameter order, with an error column
            describing the failed points.

        Raises
        ------
        pyvdp.util.errors.ConfigError
            If the configuration does not suit this sweep.
        pyvdp.util.errors.SweepPointError
            In strict mode, when a point fails.

        """
        self._pre_sweep_validation(config)
        if points is None:
            rows = self.points(config)
        else:
            rows = self._rows_from(points)

        workers = config.workers if workers is None else workers
        strict = config.strict if strict is None else strict

        HookRunner.execute_sweep_init(self.name, len(rows))
        df_array = self._type.to_df_array(rows, config, workers, strict)
        df = self._type.to_dataframe(df_array)

        self.rows = rows
        self.n_failures = int((df['error'] != '').sum())
        HookRunner.execute_sweep_done(self.name, len(rows), self.n_failures)
        return df

    @staticmethod
    def pinned(config):
        """Solver settings of `config` recorded in dataset headers."""
        values = config.as_dict()
        return {k: values[k] for k in PINNED_KEYS}

    def datasets(self, config, points=None, workers=None, strict=None,
                 notes=None):
        """Run the sweep and wrap the result in datasets.

        See `sweep` for the parameters.

        Returns
        -------
        list of pyvdp.util.output.Dataset
            The datasets produced by this sweep.

        """
        df = self.sweep(config, points, workers, strict)
        return [Dataset(self.name, df, config.as_dict(), self.pinned(config),
                        notes)]
