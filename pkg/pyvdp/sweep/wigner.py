# -*- coding: utf-8 -*-
"""Module containing the sweep class producing Wigner function grids."""
import pandas as pd

from ..types.rows import WignerSummaryRow
from ..util.output import Dataset
from .abstract import AbstractSweep


class WignerSweep(AbstractSweep):
    """Wigner functions of the steady states at one or more parameter
    points.

    Besides the summary dataset with one row per point, a grid dataset
    holds the sampled Wigner functions in long format.
    """

    mode = 'wigner'

    def __init__(self, rowtype=WignerSummaryRow, name=None):
        """Initialisation.

        Parameters
        ----------
        rowtype : subclass of pyvdp.types.abstract.AbstractRowType
            Reference to a class representing the rows of this sweep.
            Optional: defaults to the WignerSummaryRow type.
        name : str, optional
            Dataset name, defaults to 'wigner'.

        """
        super(WignerSweep, self).__init__(rowtype, name)

    def _parameter_points(self, config):
        if not config.has_range:
            return [config.params()]
        return super(WignerSweep, self)._parameter_points(config)

    def grid_frame(self, scaled=False):
        """Sampled Wigner functions of the solved points.

        Parameters
        ----------
        scaled : bool
            Add a column W_scaled with every grid divided by its own
            maximum, for display.

        Returns
        -------
        pandas.DataFrame
            Columns index, omega_drive, the grid coordinates (r, phi or x, y)
            and W; failed points are left out.

        """
        frames = []
        for row in self.rows:
            if row.grid is None:
                continue
            df = row.grid.to_frame()
            if scaled:
                df['W_scaled'] = row.grid.normalized().values.ravel()
            df.insert(0, 'omega_drive', row.params.omega_drive)
            df.insert(0, 'index', row.index)
            frames.append(df)
        if not frames:
            return pd.DataFrame(columns=['index', 'omega_drive', 'W'])
        return pd.concat(frames, ignore_index=True)

    def grid_header_lines(self):
        """Grid convention of the solved points."""
        for row in self.rows:
            if row.grid is not None:
                return row.grid.header_lines()[:1]
        return []

    def datasets(self, config, points=None, workers=None, strict=None,
                 notes=None, scaled=False):
        """Run the sweep and return the summary and grid datasets.

        See `AbstractSweep.sweep` for the parameters; `scaled` is passed to
        `grid_frame`.

        Returns
        -------
        list of pyvdp.util.output.Dataset
            The summary dataset, followed by the grid dataset.

        """
        summary = super(WignerSweep, self).datasets(config, points, workers,
                                                    strict, notes)[0]
        grid = Dataset(self.name + '_grid', self.grid_frame(scaled),
                       config.as_dict(), self.pinned(config),
                       list(notes or []) + self.grid_header_lines())
        return [summary, grid]
