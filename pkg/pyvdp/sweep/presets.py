# -*- coding: utf-8 -*-
"""Module containing the figure presets: fixed sweeps producing the
reference datasets of the standard response, gain and phase-space plots.

Every preset returns a list of datasets whose headers pin the truncation
and tolerance settings used.
"""

import numpy as np
import pandas as pd

from ..analytic import (
    critical_coherence_profile,
    critical_population_profile,
    limitcycle_coherence_profile,
    limitcycle_population_profile,
)
from ..model import VdpParams
from ..observables import coherence_profile, coherences
from ..steady import initial_truncation, solve_steady
from ..util.config import SweepConfig
from ..util.errors import ConfigError
from ..util.output import Dataset
from .classical import ClassicalSweep
from .drive import DriveSweep
from .rate import RateSweep
from .wigner import WignerSweep

#: Solver settings shared by all presets.
PINNED = {'tail_tol': 1e-6, 'n_max': 200, 'tol': 1e-10}

#: Drive used for the weak-drive profiles, in units of gamma2.
PROFILE_DRIVE = 1e-3

#: Wigner panel drives: linear response, negative-susceptibility dip and
#: classical regime at gamma1_minus / gamma2 = 0.02.
FIG3_DRIVES = (0.007, 0.05, 3.0)

#: Wigner panel drives from the symmetry-broken limit cycle to the classical
#: steady state at gamma1_plus / gamma2 = 50, gamma1_minus / gamma2 = 20.
FIG5_DRIVES = (0.5, 5.0, 50.0)

#: Mean linear rates of the critical response curves.
FIG4_GAMMA1 = (5., 50., 1000.)

#: Limit-cycle gain surface: loss rates and gain-to-loss ratios.
FIGS4_LOSSES = (5., 10., 20.)
FIGS4_RATIOS = (2., 4., 8.)

#: Points per axis of the signal-to-noise grids.
FIGS5_POINTS = 25
FIGS5_POINTS_FULL = 100

PRESETS = {}


def preset(name):
    """Register the decorated function as the figure preset `name`."""
    def register(fn):
        PRESETS[name] = fn
        return fn
    return register


def _config(mode, options, **kwargs):
    values = dict(PINNED)
    values.update(kwargs)
    return SweepConfig(mode=mode, workers=options.get('workers', 1),
                       strict=options.get('strict', False), **values)


def _drives_note(drives):
    return 'wigner drives: {}'.format(', '.join(repr(d) for d in drives))


def profile_dataset(name, params, population_oracle, coherence_oracle,
                    weighted):
    """Populations and coherences of a weakly driven steady state.

    The coherences are divided by the drive, so they compare with the
    per-unit-drive closed forms.

    Parameters
    ----------
    name : str
        Dataset name.
    params : pyvdp.model.VdpParams
        Undriven rates; the drive is set to PROFILE_DRIVE gamma2.
    population_oracle : callable
        Closed-form populations, called with the level numbers.
    coherence_oracle : callable
        Closed-form coherences per unit drive, called with the level
        numbers.
    weighted : bool
        Report sqrt(n) rho[n, n-1] (True) or rho[n, n-1] (False).

    Returns
    -------
    pyvdp.util.output.Dataset
        Columns n, p_n, p_oracle, coherence and coherence_oracle.

    """
    omega = PROFILE_DRIVE * params.gamma2
    driven = params.with_drive(omega)
    trunc = initial_truncation(driven, PINNED['tail_tol'], PINNED['n_max'])
    result = solve_steady(driven, trunc, PINNED['tol'])
    rho = result.rho

    n = np.arange(rho.dim)
    coherence = coherence_profile(rho) if weighted else coherences(rho)
    df = pd.DataFrame({
        'n': n,
        'p_n': rho.populations(),
        'p_oracle': population_oracle(n),
        'coherence': coherence / omega,
        'coherence_oracle': coherence_oracle(n),
    }, columns=['n', 'p_n', 'p_oracle', 'coherence', 'coherence_oracle'])

    config = dict(params.as_dict(), omega_drive=omega, preset=name)
    pinned = dict(PINNED, n_levels=result.n_levels)
    notes = ['coherence: {} per unit drive'.format(
        'sqrt(n) rho[n, n-1]' if weighted else 'rho[n, n-1]')]
    return Dataset(name, df, config, pinned, notes)


@preset('fig1')
def fig1(**options):
    """Response and susceptibility versus drive at the critical point."""
    config = _config('drive-sweep', options, start=1e-4, stop=10., count=40)
    return DriveSweep(name='fig1').datasets(config)


@preset('fig2')
def fig2(**options):
    """Zero-drive susceptibility versus damping and antidamping."""
    datasets = []
    for name, parameter in (('fig2_loss', 'gamma1_minus'),
                            ('fig2_gain', 'gamma1_plus')):
        config = _config('rate-sweep', options, sweep_parameter=parameter,
                         start=1e-3, stop=1., count=16)
        datasets.extend(RateSweep(name=name).datasets(config))

    config = _config('rate-sweep', options, start=1e-3, stop=1e-3, count=1)
    datasets.extend(RateSweep(name='fig2_critical').datasets(
        config, points=[VdpParams()]))
    return datasets


@preset('fig3')
def fig3(**options):
    """Non-monotonic response at weak damping, with Wigner panels."""
    config = _config('drive-sweep', options, gamma1_minus=0.02, start=1e-4,
                     stop=10., count=40)
    datasets = DriveSweep(name='fig3_response').datasets(config)

    config = _config('wigner', options, gamma1_minus=0.02)
    points = [config.params().with_drive(w) for w in FIG3_DRIVES]
    datasets.extend(WignerSweep(name='fig3_wigner').datasets(
        config, points, notes=[_drives_note(FIG3_DRIVES)], scaled=True))
    return datasets


@preset('fig4')
def fig4(**options):
    """Response at the critical condition and its sensitivity gain."""
    config = _config('drive-sweep', options, start=1e-3, stop=100.,
                     count=12, chi=False)
    drives = config.ranges()[0].values
    points = [VdpParams(G, G, 1., float(w)) for G in FIG4_GAMMA1
              for w in drives]
    notes = ['Gamma1 values: {}'.format(
        ', '.join(repr(G) for G in FIG4_GAMMA1))]
    datasets = DriveSweep(name='fig4_response').datasets(config, points,
                                                         notes=notes)

    config = _config('rate-sweep', options, sweep_parameter='Gamma1',
                     start=1., stop=1000., count=7)
    datasets.extend(RateSweep(name='fig4_gain').datasets(config))
    return datasets


@preset('fig5')
def fig5(**options):
    """Wigner panels from the limit cycle to the classical steady state."""
    config = _config('wigner', options, gamma1_plus=50., gamma1_minus=20.)
    points = [config.params().with_drive(w) for w in FIG5_DRIVES]
    return WignerSweep(name='fig5_wigner').datasets(
        config, points, notes=[_drives_note(FIG5_DRIVES)], scaled=True)


@preset('figS1')
def figS1(**options):
    """Classical scaled response f(x) with its asymptotes."""
    config = _config('classical', options, sweep_parameter='x',
                     omega_drive=1., start=-10., stop=10., count=201,
                     scale='linear')
    return ClassicalSweep(name='figS1').datasets(config)


@preset('figS2')
def figS2(**options):
    """Critical-point profiles and susceptibility versus Gamma1."""
    Gamma1 = 1000.
    datasets = [profile_dataset(
        'figS2_profile', VdpParams(Gamma1, Gamma1, 1.),
        lambda n: critical_population_profile(Gamma1, 1., n),
        lambda n: critical_coherence_profile(Gamma1, 1., n, 1.),
        weighted=True)]

    config = _config('rate-sweep', options, sweep_parameter='Gamma1',
                     start=1e-2, stop=1e3, count=11)
    datasets.extend(RateSweep(name='figS2_chi').datasets(config))
    return datasets


@preset('figS4')
def figS4(**options):
    """Limit-cycle profiles and the coarse gain surface."""
    gp, gm = 200., 20.
    datasets = [profile_dataset(
        'figS4_profile', VdpParams(gp, gm, 1.),
        lambda n: limitcycle_population_profile(gp, gm, 1., n),
        lambda n: limitcycle_coherence_profile(gp, gm, 1., n, 1.),
        weighted=False)]

    config = _config('rate-sweep', options, start=FIGS4_LOSSES[0],
                     stop=FIGS4_LOSSES[-1], count=len(FIGS4_LOSSES))
    points = [VdpParams(ratio * loss, loss, 1.) for loss in FIGS4_LOSSES
              for ratio in FIGS4_RATIOS]
    notes = ['gamma1_minus values: {}'.format(
        ', '.join(repr(v) for v in FIGS4_LOSSES)),
        'gamma1_plus / gamma1_minus values: {}'.format(
            ', '.join(repr(v) for v in FIGS4_RATIOS))]
    datasets.extend(RateSweep(name='figS4_gain').datasets(config, points,
                                                          notes=notes))
    return datasets


@preset('figS5')
def figS5(**options):
    """Response and signal-to-noise grids over drive and dissipation."""
    count = FIGS5_POINTS_FULL if options.get('full_resolution') else \
        FIGS5_POINTS
    datasets = []

    config = _config('drive-sweep', options, start=1e-3, stop=10.,
                     count=count, second_parameter='gamma1_minus',
                     second_start=1e-3, second_stop=1., second_count=count)
    datasets.extend(DriveSweep(name='figS5_damped').datasets(config))

    config = _config('drive-sweep', options, gamma1_minus=30., start=1e-2,
                     stop=10., count=count, second_parameter='gamma1_plus',
                     second_start=0., second_stop=90., second_count=count,
                     second_scale='linear')
    datasets.extend(DriveSweep(name='figS5_pumped').datasets(config))
    return datasets


def run_preset(name, workers=1, strict=False, full_resolution=False):
    """Produce the datasets of a figure preset.

    Parameters
    ----------
    name : str
        One of the keys of `PRESETS`.
    workers : int
        Number of worker threads per sweep.
    strict : bool
        Abort at the first failing point.
    full_resolution : bool
        Use the full grid resolution where a preset has a coarse default.

    Returns
    -------
    list of pyvdp.util.output.Dataset
        The datasets of the preset.

    Raises
    ------
    pyvdp.util.errors.ConfigError
        If the preset is unknown.

    """
    if name not in PRESETS:
        raise ConfigError("unknown preset '{}', use one of {}.".format(
            name, ', '.join(sorted(PRESETS))), field='preset')
    return PRESETS[name](workers=workers, strict=strict,
                         full_resolution=full_resolution)


__all__ = ['PRESETS', 'run_preset', 'profile_dataset']
