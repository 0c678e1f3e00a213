# -*- coding: utf-8 -*-
"""Sweep classes, one per configuration mode."""
from .classical import ClassicalSweep
from .drive import DriveSweep
from .rate import RateSweep
from .wigner import WignerSweep

#: Sweep class per configuration mode.
SWEEPS = {
    DriveSweep.mode: DriveSweep,
    RateSweep.mode: RateSweep,
    WignerSweep.mode: WignerSweep,
    ClassicalSweep.mode: ClassicalSweep,
}

__all__ = ['SWEEPS', 'ClassicalSweep', 'DriveSweep', 'RateSweep',
           'WignerSweep']
