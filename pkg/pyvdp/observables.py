# -*- coding: utf-8 -*-
"""Module extracting physical quantities from steady states: the coherent
response, number statistics, noise, signal-to-noise ratio, susceptibility
and sensitivity gain."""
import math
import warnings

import numpy as np
from scipy.optimize import OptimizeWarning, curve_fit

from pyvdp.model import Truncation
from pyvdp.steady import solve_steady
from pyvdp.util.errors import (
    InvalidParameterError,
    NegativeVarianceWarning,
    NonRealResponse,
    PassiveUndefined,
)

#: Largest imaginary part of the response accepted as roundoff.
IMAG_TOL = 1e-10

#: Most negative variance accepted as roundoff before warning.
VARIANCE_TOL = 1e-10

#: Lower bound of the fitted half-Gaussian width, in levels.
MIN_FIT_WIDTH = 0.5


class ResponsePoint(object):
    """Steady-state observables at a single drive amplitude."""

    def __init__(self, omega_drive, response, mean_n, sigma, snr, n_levels,
                 residual=None, tail_mass=None):
        self.omega_drive = omega_drive
        self.response = response
        self.mean_n = mean_n
        self.sigma = sigma
        self.snr = snr
        self.n_levels = n_levels
        self.residual = residual
        self.tail_mass = tail_mass

    def __repr__(self):
        return ('ResponsePoint(omega_drive={!r}, response={!r}, mean_n={!r}, '
                'sigma={!r}, snr={!r}, n_levels={!r})').format(
            self.omega_drive, self.response, self.mean_n, self.sigma,
            self.snr, self.n_levels)


class Susceptibility(object):
    """Finite-difference estimate of d<a>/dOmega."""

    def __init__(self, chi, omega_at, step, estimate_error, n_levels=None):
        """Initialisation.

        Parameters
        ----------
        chi : float
            Richardson-extrapolated derivative.
        omega_at : float
            Drive amplitude where the derivative is taken.
        step : float
            Largest finite-difference step used.
        estimate_error : float
            Difference between the extrapolated and the finest estimate.
        n_levels : int, optional
            Truncation shared by all solves.

        """
        self.chi = chi
        self.omega_at = omega_at
        self.step = step
        self.estimate_error = estimate_error
        self.n_levels = n_levels

    def __repr__(self):
        return ('Susceptibility(chi={!r}, omega_at={!r}, step={!r}, '
                'estimate_error={!r})').format(
            self.chi, self.omega_at, self.step, self.estimate_error)


def _complex_response(rho):
    n = np.arange(1, rho.dim)
    return complex(np.sum(np.sqrt(n) * np.diagonal(rho.entries, -1)))


def response(rho):
    """Coherent response <a> = sum_n sqrt(n) rho[n, n-1].

    Parameters
    ----------
    rho : pyvdp.model.DensityMatrix
        Normalized state.

    Returns
    -------
    float
        Real part of <a>.

    Raises
    ------
    pyvdp.util.errors.NonRealResponse
        If the imaginary part of <a> exceeds 1e-10.

    """
    value = _complex_response(rho)
    if abs(value.imag) > IMAG_TOL:
        raise NonRealResponse(
            "The response has an imaginary part of {:.3g}, which is not "
            "compatible with a real drive.".format(value.imag))
    return value.real


def mean_number(rho):
    """Mean occupation <n> = sum_n n rho[n, n]."""
    return float(np.dot(np.arange(rho.dim), rho.populations()))


def number_distribution(rho):
    """Populations p_n = rho[n, n].

    Parameters
    ----------
    rho : pyvdp.model.DensityMatrix
        Normalized state.

    Returns
    -------
    numpy.ndarray
        Real array of length N.

    """
    return rho.populations()


def coherences(rho):
    """First off-diagonal rho[n, n-1] for n = 0 .. N-1 (zero at n = 0)."""
    chi_n = np.zeros(rho.dim)
    chi_n[1:] = np.diagonal(rho.entries, -1).real
    return chi_n


def coherence_profile(rho):
    """Weighted coherences q_n = sqrt(n) rho[n, n-1], summing to <a>."""
    return np.sqrt(np.arange(rho.dim)) * coherences(rho)


def number_moments(p):
    """Mean and standard deviation of a number distribution.

    Parameters
    ----------
    p : array_like
        Populations p_n, n = 0 .. N-1.

    Returns
    -------
    mean, std : float
        Moments of the normalized distribution.

    """
    p = np.asarray(p, dtype=float)
    n = np.arange(p.size)
    total = p.sum()
    mean = np.dot(n, p) / total
    variance = np.dot((n - mean) ** 2, p) / total
    return float(mean), float(math.sqrt(max(variance, 0.)))


def fit_half_gaussian_width(p):
    """Fit p_n = A exp(-(n / w)**2) and return the width w.

    The second moment of the distribution gives the starting point of a
    least-squares fit. Distributions narrower than one level, such as the
    vacuum, are not fitted: their moment width is returned.

    Parameters
    ----------
    p : array_like
        Populations p_n, n = 0 .. N-1.

    Returns
    -------
    float
        Fitted width w.

    """
    p = np.asarray(p, dtype=float)
    n = np.arange(p.size, dtype=float)
    w0 = math.sqrt(2. * np.dot(n ** 2, p) / p.sum())
    if w0 < 1.:
        return float(w0)

    def model(x, amplitude, width):
        return amplitude * np.exp(-(x / width) ** 2)

    with warnings.catch_warnings():
        # the covariance is not used
        warnings.simplefilter('ignore', OptimizeWarning)
        (amplitude, width), _ = curve_fit(
            model, n, p, p0=(p[0], w0),
            bounds=((0., MIN_FIT_WIDTH), (np.inf, np.inf)))
    return float(width)


def noise_sigma(rho):
    """Phase-space spread sigma = sqrt(<n> + 1/2 - |<a>|**2).

    Negative arguments of the square root are clamped to 0; a
    NegativeVarianceWarning is emitted when they are below -1e-10.
    """
    variance = mean_number(rho) + 0.5 - abs(_complex_response(rho)) ** 2
    if variance < 0:
        if variance < -VARIANCE_TOL:
            warnings.warn(
                "Negative variance {:.3g} clamped to zero.".format(variance),
                NegativeVarianceWarning)
        variance = 0.
    return math.sqrt(variance)


def snr(rho):
    """Signal-to-noise ratio <a> / sigma, 0 for a vanishing response."""
    value = response(rho)
    if value == 0:
        return 0.0
    sigma = noise_sigma(rho)
    if sigma == 0:
        return math.copysign(math.inf, value)
    return value / sigma


def passive_chi(gamma1_minus):
    """Susceptibility 2 / gamma1_minus of a purely damped oscillator.

    Raises
    ------
    pyvdp.util.errors.PassiveUndefined
        If gamma1_minus is zero.

    """
    if gamma1_minus <= 0:
        raise PassiveUndefined(
            "The passive susceptibility requires gamma1_minus > 0.")
    return 2. / gamma1_minus


def response_point(params, trunc=None, tol=1e-10):
    """Solve the steady state and collect its observables.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.
    trunc : pyvdp.model.Truncation, optional
        Starting truncation, see `pyvdp.steady.solve_steady`.
    tol : float
        Solver tolerance.

    Returns
    -------
    ResponsePoint
        Observables of the steady state.

    """
    result = solve_steady(params, trunc, tol)
    rho = result.rho
    return ResponsePoint(params.omega_drive, response(rho), mean_number(rho),
                         noise_sigma(rho), snr(rho), result.n_levels,
                         result.residual, result.tail_mass)


def _responses(params, omegas, trunc, tol):
    """Responses at several drives, all at one common truncation.

    A drive of exactly 0 has a vanishing response by the drive
    antisymmetry and is not solved.
    """
    results = {}
    for omega in omegas:
        if omega != 0:
            results[omega] = solve_steady(params.with_drive(omega), trunc,
                                          tol)
    n_levels = max([r.n_levels for r in results.values()] or [0])

    for omega, result in results.items():
        if result.n_levels < n_levels:
            if trunc is not None:
                base = trunc.with_levels(n_levels)
            else:
                base = Truncation(n_levels, n_max=max(n_levels, 200))
            results[omega] = solve_steady(params.with_drive(omega), base,
                                          tol)

    values = [0.0 if omega == 0 else response(results[omega].rho)
              for omega in omegas]
    return values, n_levels


def finite_difference_step(params, omega_at):
    """Step max(1e-3 Omega, 1e-4 gamma2) of the central difference."""
    return max(1e-3 * abs(omega_at), 1e-4 * params.gamma2)


def susceptibility(params, omega_at=None, trunc=None, tol=1e-10):
    """Finite-difference susceptibility d<a>/dOmega.

    Central differences with steps delta and delta / 2 are combined by
    Richardson extrapolation. At zero drive the response is odd in Omega,
    so <a>(delta) / delta is used instead.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates; the drive is replaced by `omega_at`.
    omega_at : float, optional
        Drive amplitude, >= 0. Defaults to ``params.omega_drive``.
    trunc : pyvdp.model.Truncation, optional
        Starting truncation; all solves share the final truncation.
    tol : float
        Solver tolerance.

    Returns
    -------
    Susceptibility
        Extrapolated derivative with its error estimate.

    Raises
    ------
    pyvdp.util.errors.InvalidParameterError
        If `omega_at` is negative.

    """
    if omega_at is None:
        omega_at = params.omega_drive
    if omega_at < 0:
        raise InvalidParameterError(
            "The susceptibility is evaluated at omega_at >= 0, got "
            "{}.".format(omega_at))

    delta = finite_difference_step(params, omega_at)
    half = delta / 2.

    if omega_at == 0:
        (a_full, a_half), n_levels = _responses(params, [delta, half],
                                                trunc, tol)
        chi_full = a_full / delta
        chi_half = a_half / half
    else:
        omegas = [omega_at + delta, omega_at - delta,
                  omega_at + half, omega_at - half]
        (ap, am, hp, hm), n_levels = _responses(params, omegas, trunc, tol)
        chi_full = (ap - am) / (2. * delta)
        chi_half = (hp - hm) / (2. * half)

    chi = (4. * chi_half - chi_full) / 3.
    estimate_error = abs(chi_half - chi_full) / 3.
    return Susceptibility(chi, omega_at, delta, estimate_error, n_levels)


def gain0(params, trunc=None, tol=1e-10):
    """Sensitivity gain over a passive oscillator at vanishing drive.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates; the drive is ignored.
    trunc : pyvdp.model.Truncation, optional
        Starting truncation.
    tol : float
        Solver tolerance.

    Returns
    -------
    float
        chi(Omega -> 0) / (2 / gamma1_minus).

    Raises
    ------
    pyvdp.util.errors.PassiveUndefined
        If gamma1_minus is zero.

    """
    chi_p = passive_chi(params.gamma1_minus)
    return susceptibility(params, 0., trunc, tol).chi / chi_p
