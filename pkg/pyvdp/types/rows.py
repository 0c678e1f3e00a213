# -*- coding: utf-8 -*-
"""Module containing the row types of the pyvdp datasets, one per sweep
mode."""
import math
import warnings

from pyvdp import analytic
from pyvdp.analytic import ClassicalParams
from pyvdp.observables import (
    finite_difference_step,
    fit_half_gaussian_width,
    mean_number,
    noise_sigma,
    number_moments,
    passive_chi,
    response,
    snr,
    susceptibility,
)
from pyvdp.steady import solve_steady
from pyvdp.types.abstract import ERROR_FIELD, AbstractRowType
from pyvdp.types.fields import (
    DiagnosticField,
    InputField,
    OracleField,
    ResultField,
)
from pyvdp.util.errors import (
    DegenerateSteadyState,
    LimitCycleAmplitudeWarning,
    VdpError,
)
from pyvdp.wigner import GridSpec, wigner_grid

REGIME_NAMES = ('quantum_linear', 'three_level', 'critical_gaussian',
                'limit_cycle', 'classical')

_rate_inputs = [
    InputField('index', 'integer', 'Position of the point in the sweep.'),
    InputField('gamma1_plus', definition='One-particle gain rate.'),
    InputField('gamma1_minus', definition='One-particle loss rate.'),
    InputField('gamma2', definition='Two-particle loss rate.'),
    InputField('omega_drive', definition='Resonant drive amplitude.'),
]

_observables = [
    ResultField('response', definition='Coherent response <a>.'),
    ResultField('mean_n', definition='Mean occupation <n>.'),
    ResultField('sigma', definition='Phase-space spread about <a>.'),
    ResultField('snr', definition='Signal-to-noise ratio <a> / sigma.'),
    ResultField('chi', definition='Susceptibility d<a>/dOmega.'),
    ResultField('chi_error',
                definition='Richardson error estimate of chi.'),
]

_regimes = [OracleField(name, 'boolean',
                        'Whether the {} formulas apply.'.format(name))
            for name in REGIME_NAMES]

_diagnostics = [
    DiagnosticField('n_levels', 'integer', 'Final truncation.'),
    DiagnosticField('residual', definition='Max-norm residual of L rho.'),
    DiagnosticField('tail_mass',
                    definition='Occupation of the top two levels.'),
]


def guarded(fn, *args):
    """Evaluate a closed-form prediction, NaN where it is undefined."""
    try:
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', LimitCycleAmplitudeWarning)
            return float(fn(*args))
    except (ArithmeticError, RuntimeError, ValueError, VdpError):
        return math.nan


class _QuantumRow(AbstractRowType):
    """Row of a sweep solving the steady state of the quantum model."""

    def _solve(self, trunc, config):
        """Solve the steady state of the row.

        An undriven point without a unique steady state is represented by
        the steady state at the finite-difference step, its limit for a
        vanishing drive. The response is odd in the drive and is zero there.

        Returns
        -------
        result : pyvdp.steady.SteadyStateResult
            The steady state.
        limit : bool
            Whether the vanishing-drive limit was used.

        """
        try:
            return solve_steady(self.params, trunc, config.tol), False
        except DegenerateSteadyState:
            if self.params.omega_drive != 0:
                raise
        delta = finite_difference_step(self.params, 0.)
        return solve_steady(self.params.with_drive(delta), trunc,
                            config.tol), True

    def _steady_observables(self, config):
        """Solve the steady state and fill the observable columns.

        Returns
        -------
        pyvdp.steady.SteadyStateResult
            The steady state.

        """
        trunc = config.truncation(self.params)
        result, limit = self._solve(trunc, config)
        rho = result.rho
        self.data.update({
            'response': 0. if limit else response(rho),
            'mean_n': mean_number(rho),
            'sigma': noise_sigma(rho),
            'snr': 0. if limit else snr(rho),
            'n_levels': result.n_levels,
            'residual': result.residual,
            'tail_mass': result.tail_mass,
        })

        if config.chi:
            chi = susceptibility(self.params, abs(self.params.omega_drive),
                                 trunc.with_levels(result.n_levels),
                                 config.tol)
            self.data['chi'] = chi.chi
            self.data['chi_error'] = chi.estimate_error
            self.data['n_levels'] = max(result.n_levels, chi.n_levels)
        else:
            self.data['chi'] = math.nan
            self.data['chi_error'] = math.nan
        return result

    def _regime_flags(self):
        self.data.update(analytic.regime_flags(self.params))


class DriveSweepRow(_QuantumRow):
    """Steady-state observables at one drive amplitude, with the classical
    and asymptotic predictions of the response."""

    fields = AbstractRowType.extend_fields(_rate_inputs + _observables + [
        OracleField('classical_response',
                    definition='Classical amplitude for the same rates.'),
        OracleField('classical_chi',
                    definition='Classical susceptibility.'),
        OracleField('oracle', 'string',
                    'Name of the applicable asymptotic formula.'),
        OracleField('oracle_response',
                    definition='Response of the applicable formula.'),
        OracleField('oracle_chi',
                    definition='Susceptibility of the applicable formula.'),
    ] + _regimes + _diagnostics)

    def compute(self, config):
        self._steady_observables(config)

        classical = ClassicalParams.from_vdp(self.params)
        sign = math.copysign(1., self.params.omega_drive)
        self.data['classical_response'] = sign * guarded(
            analytic.classical_response, classical)
        self.data['classical_chi'] = guarded(analytic.classical_chi,
                                             classical)

        name, value = analytic.oracle_response(self.params)
        self.data['oracle'] = name or ''
        self.data['oracle_response'] = value
        self.data['oracle_chi'] = analytic.oracle_chi(self.params)[1]
        self._regime_flags()


class RateSweepRow(_QuantumRow):
    """Steady-state observables and susceptibility at one set of linear
    rates, with the gain over a passive oscillator and the closed-form
    susceptibilities of every regime."""

    fields = AbstractRowType.extend_fields(_rate_inputs + [
        InputField('Gamma1', definition='Mean linear rate.'),
    ] + _observables + [
        ResultField('passive_chi',
                    definition='Passive susceptibility 2 / gamma1_minus.'),
        ResultField('gain', definition='chi / passive_chi.'),
        ResultField('number_std',
                    definition='Standard deviation of the populations.'),
        ResultField('number_width',
                    definition='Fitted half-Gaussian width of the '
                               'populations.'),
        OracleField('classical_chi',
                    definition='Classical susceptibility.'),
        OracleField('three_level_chi',
                    definition='Three-level susceptibility.'),
        OracleField('critical_chi',
                    definition='Critical Gaussian susceptibility.'),
        OracleField('critical_gain',
                    definition='Critical Gaussian sensitivity gain.'),
        OracleField('limitcycle_chi',
                    definition='Limit-cycle susceptibility.'),
        OracleField('limitcycle_gain',
                    definition='Limit-cycle sensitivity gain.'),
        OracleField('oracle', 'string',
                    'Name of the applicable asymptotic formula.'),
        OracleField('oracle_chi',
                    definition='Susceptibility of the applicable formula.'),
    ] + _regimes + _diagnostics)

    def compute(self, config):
        p = self.params
        gp, gm, g2 = p.gamma1_plus, p.gamma1_minus, p.gamma2

        populations = self._steady_observables(config).rho.populations()
        chi_p = guarded(passive_chi, gm)
        self.data['passive_chi'] = chi_p
        self.data['gain'] = self.data['chi'] / chi_p

        self.data['number_std'] = number_moments(populations)[1]
        self.data['number_width'] = guarded(fit_half_gaussian_width,
                                            populations)

        self.data['classical_chi'] = guarded(
            analytic.classical_chi, ClassicalParams.from_vdp(p))
        self.data['three_level_chi'] = guarded(analytic.three_level_chi,
                                               gp, gm)
        self.data['critical_chi'] = guarded(analytic.critical_chi,
                                            p.Gamma1, g2)
        self.data['critical_gain'] = guarded(analytic.critical_gain,
                                             p.Gamma1, g2)
        if gp > gm:
            self.data['limitcycle_chi'] = guarded(analytic.limitcycle_chi,
                                                  gp, gm, g2)
            self.data['limitcycle_gain'] = guarded(analytic.limitcycle_gain,
                                                   gp, gm, g2)
        else:
            self.data['limitcycle_chi'] = math.nan
            self.data['limitcycle_gain'] = math.nan

        name, value = analytic.oracle_chi(p)
        self.data['oracle'] = name or ''
        self.data['oracle_chi'] = value
        self._regime_flags()


class WignerSummaryRow(AbstractRowType):
    """Phase-space functionals of the Wigner function of one steady state.

    The full grid is kept in the `grid` attribute after `compute`.
    """

    fields = AbstractRowType.extend_fields(_rate_inputs + [
        ResultField('response', definition='Coherent response <a>.'),
        ResultField('integral', definition='Integral of W over the plane.'),
        ResultField('center_re', definition='Real part of the center of '
                                            'mass of W.'),
        ResultField('center_im', definition='Imaginary part of the center '
                                            'of mass of W.'),
        ResultField('spread', definition='Largest variation of W around a '
                                         'circle of the grid.'),
        ResultField('w_min', definition='Minimum of W on the grid.'),
        ResultField('w_max', definition='Maximum of W on the grid.'),
        OracleField('classical_response',
                    definition='Classical amplitude for the same rates.'),
        DiagnosticField('r_max', definition='Radius of the grid.'),
    ] + _diagnostics)

    grid = None

    def compute(self, config):
        trunc = config.truncation(self.params)
        result = solve_steady(self.params, trunc, config.tol)
        spec = GridSpec(config.grid_kind, config.r_max, config.n_radii,
                        config.n_angles, config.n_points)
        grid = wigner_grid(result.rho, spec)
        self.grid = grid

        center = complex(grid.center_of_mass())
        self.data.update({
            'response': response(result.rho),
            'integral': grid.integral(),
            'center_re': center.real,
            'center_im': center.imag,
            'spread': grid.spread() if grid.kind == 'polar' else math.nan,
            'w_min': float(grid.values.min()),
            'w_max': float(grid.values.max()),
            'r_max': grid.r_max,
            'n_levels': result.n_levels,
            'residual': result.residual,
            'tail_mass': result.tail_mass,
        })
        self.data['classical_response'] = math.copysign(1., (
            self.params.omega_drive)) * guarded(
            analytic.classical_response,
            ClassicalParams.from_vdp(self.params))


class ClassicalRow(AbstractRowType):
    """Closed-form classical steady state at one parameter point.

    Inputs are the classical parameters and the scaled variable x = gamma1 /
    (gamma2**(1/3) Omega**(2/3)).
    """

    fields = AbstractRowType.extend_fields([
        InputField('index', 'integer', 'Position of the point in the sweep.'),
        InputField('gamma1', definition='Net linear gain.'),
        InputField('gamma2', definition='Two-particle loss rate.'),
        InputField('omega_drive', definition='Resonant drive amplitude.'),
        InputField('x', definition='Scaled gain.'),
        OracleField('f', definition='Real root of x f - f**3 + 1 = 0.'),
        OracleField('f_asymptote',
                    definition='Large-|x| asymptote of f.'),
        OracleField('classical_response',
                    definition='Classical amplitude alpha.'),
        OracleField('classical_chi',
                    definition='Classical susceptibility.'),
        OracleField('gain_over_passive',
                    definition='classical_chi gamma1_minus / 2 for gamma1 '
                               '< 0, with gamma1_minus = -2 gamma1.'),
    ])

    def compute(self, config):
        p = self.params
        x = self.inputs['x']
        self.data['f'] = guarded(analytic.classical_f, x)
        self.data['f_asymptote'] = guarded(analytic.classical_f_asymptote,
                                           x)
        self.data['classical_response'] = guarded(
            analytic.classical_response, p)
        chi = guarded(analytic.classical_chi, p)
        self.data['classical_chi'] = chi
        if p.gamma1 < 0:
            self.data['gain_over_passive'] = chi * (-p.gamma1)
        else:
            self.data['gain_over_passive'] = math.nan


__all__ = ['DriveSweepRow', 'RateSweepRow', 'WignerSummaryRow',
           'ClassicalRow', 'ERROR_FIELD', 'REGIME_NAMES']
