# -*- coding: utf-8 -*-
"""Module containing the sweep class over drive amplitudes."""
from ..types.rows import DriveSweepRow
from .abstract import AbstractSweep


class DriveSweep(AbstractSweep):
    """Sweep of the steady-state response over the drive amplitude (or any
    other parameter) at fixed rates."""

    mode = 'drive-sweep'

    def __init__(self, rowtype=DriveSweepRow, name=None):
        """Initialisation.

        Parameters
        ----------
        rowtype : subclass of pyvdp.types.abstract.AbstractRowType
            Reference to a class representing the rows of this sweep.
            Optional: defaults to the DriveSweepRow type.
        name : str, optional
            Dataset name, defaults to 'drive-sweep'.

        """
        super(DriveSweep, self).__init__(rowtype, name)
