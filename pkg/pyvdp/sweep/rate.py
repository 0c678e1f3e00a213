# -*- coding: utf-8 -*-
"""Module containing the sweep class over the linear rates."""
from ..types.rows import RateSweepRow
from .abstract import AbstractSweep


class RateSweep(AbstractSweep):
    """Sweep of the susceptibility and sensitivity gain over the linear
    rates, optionally on a two-dimensional grid."""

    mode = 'rate-sweep'

    def __init__(self, rowtype=RateSweepRow, name=None):
        """Initialisation.

        Parameters
        ----------
        rowtype : subclass of pyvdp.types.abstract.AbstractRowType
            Reference to a class representing the rows of this sweep.
            Optional: defaults to the RateSweepRow type.
        name : str, optional
            Dataset name, defaults to 'rate-sweep'.

        """
        super(RateSweep, self).__init__(rowtype, name)
