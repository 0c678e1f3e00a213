# -*- coding: utf-8 -*-
"""Module containing the base row type of the pyvdp datasets."""
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyvdp.types.fields import SOURCES, DiagnosticField
from pyvdp.util.errors import SweepPointError
from pyvdp.util.hooks import HookRunner
from pyvdp.util.pool import WorkerPool

#: Column recording why a sweep point failed, always the last column.
ERROR_FIELD = DiagnosticField(
    'error', 'string',
    'Exception type and message of a failed point, empty otherwise.')


def describe_error(error):
    """Short description of an exception for the error column."""
    return '{}: {}'.format(type(error).__name__, error)


class AbstractRowType(object):
    """Abstract row type grouping fields and methods common to all dataset
    rows. Not to be instantiated or used directly.

    Each instance is a single sweep point: it holds the model parameters and
    additional inputs of the point and computes the remaining columns.

    Attributes
    ----------
    fields : list of pyvdp.types.fields.AbstractField
        List of columns of this type, ending with the error column.

    """

    fields = []

    def __init__(self, index, params=None, **inputs):
        """Initialisation.

        Parameters
        ----------
        index : int
            Position of the point in the sweep.
        params : pyvdp.model.VdpParams, optional
            Model rates of the point.
        **inputs
            Values of input columns not derived from `params`.

        """
        self.index = index
        self.params = params
        self.inputs = inputs
        self.data = OrderedDict.fromkeys(self.get_field_names())

    @classmethod
    def extend_fields(cls, extra_fields):
        """Extend the fields of this type with given extra fields and return
        the new fieldset.

        The error column stays the last column.

        Parameters
        ----------
        extra_fields : list of pyvdp.types.fields.AbstractField
            Extra fields to be appended to the existing fields of this type.

        Returns
        -------
        list of pyvdp.types.fields.AbstractField
            List of the existing fields of this type, extended with the
            extra fields supplied in extra_fields.

        """
        fields = [f for f in cls.fields if f['name'] != 'error']
        fields.extend(extra_fields)
        fields.append(ERROR_FIELD)
        return fields

    @classmethod
    def get_field_names(cls):
        """Return the names of the columns of this type, in dataset order.

        Returns
        -------
        list of str
            Column names.

        """
        return [f['name'] for f in cls.fields]

    @classmethod
    def get_fields(cls, source=SOURCES):
        """Return the metadata of the fields of this type.

        Parameters
        ----------
        source : iterable of str
            Sources to include, any of 'input', 'solver', 'analytic' and
            'diagnostic'. Defaults to all sources.

        Returns
        -------
        collections.OrderedDict
            Ordered dictionary mapping the column name to its field.

        """
        return OrderedDict((f['name'], f) for f in cls.fields
                           if f['source'] in source)

    def _fill_inputs(self):
        for name in self.get_fields(source=('input',)):
            if name == 'index':
                self.data[name] = self.index
            elif name in self.inputs:
                self.data[name] = self.inputs[name]
            else:
                self.data[name] = getattr(self.params, name)

    def compute(self, config):
        """Compute the non-input columns of this row into `self.data`.

        Parameters
        ----------
        config : pyvdp.util.config.SweepConfig
            Solver settings.

        """
        raise NotImplementedError('This should be implemented in a '
                                  'subclass.')

    def solve(self, config):
        """Compute this row and report the outcome to the hooks.

        Parameters
        ----------
        config : pyvdp.util.config.SweepConfig
            Solver settings.

        Returns
        -------
        list
            The values of this row, in column order.

        """
        self._fill_inputs()
        try:
            self.compute(config)
        except Exception as e:
            HookRunner.execute_point_failed(self.index, e)
            raise
        self.data['error'] = ''
        HookRunner.execute_point_solved(self.index, dict(self.data))
        return self.get_df_array()

    def failed(self, error):
        """Values of this row for a point that failed with `error`.

        Only the input columns are kept.
        """
        self.data = OrderedDict.fromkeys(self.get_field_names())
        self._fill_inputs()
        self.data['error'] = describe_error(error)
        return self.get_df_array()

    def get_df_array(self):
        """Return the values of this row in the same order as the column
        names."""
        return [self.data[name] for name in self.get_field_names()]

    @classmethod
    def to_df_array(cls, rows, config, workers=1, strict=False):
        """Returns a dataframe array with one array (row) for each point.

        The points are solved in parallel; the output order is the order of
        `rows`.

        Parameters
        ----------
        rows : list of AbstractRowType
            The points to solve.
        config : pyvdp.util.config.SweepConfig
            Solver settings.
        workers : int
            Number of worker threads.
        strict : bool
            Abort at the first failing point instead of recording the
            failure in the error column.

        Returns
        -------
        list of list
            Dataset contents, one list of column values per point.

        Raises
        ------
        pyvdp.util.errors.SweepPointError
            In strict mode, for the first failing point.

        """
        rows = list(rows)
        pool = WorkerPool(workers, abort_on_error=strict)

        for row in rows:
            pool.execute(row.solve, (config,))

        results = list(pool.join())
        df_result = []
        for row, res in zip(rows, results):
            error = res.get_error()
            if error is not None:
                if strict:
                    raise SweepPointError(
                        'Point {} failed: {}'.format(row.index,
                                                     describe_error(error)),
                        index=row.index) from error
                df_result.append(row.failed(error))
            elif not res.skipped:
                df_result.append(res.get_result())
        return df_result

    @classmethod
    def to_dataframe(cls, df_array):
        """Assemble a dataset from rows of this type.

        Parameters
        ----------
        df_array : list of list
            Rows as returned by `to_df_array`.

        Returns
        -------
        pandas.DataFrame
            One row per point, with columns converted to their datatype.
            Integer and boolean columns holding missing values are kept as
            float and object columns respectively.

        """
        df = pd.DataFrame(df_array, columns=cls.get_field_names())
        for name, field in cls.get_fields().items():
            column = df[name]
            if field['type'] == 'float':
                df[name] = column.astype(float)
            elif field['type'] == 'integer':
                if column.notna().all():
                    df[name] = column.astype(np.int64)
                else:
                    df[name] = column.astype(float)
            elif field['type'] == 'boolean':
                if column.notna().all():
                    df[name] = column.astype(bool)
            else:
                df[name] = column.fillna('').astype(str)
        return df
