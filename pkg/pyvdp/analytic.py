# -*- coding: utf-8 -*-
"""Module with the closed-form classical solution of the driven van der Pol
oscillator and the asymptotic formulas for its quantum response.

These expressions serve as oracles for the numerical results: sweeps attach
them as extra columns and the regime flags indicate where each of them is
expected to hold. None of the formulas raise outside their trusted regime.
"""
import math
import warnings

import numpy as np

from pyvdp.util.errors import InvalidParameterError, LimitCycleAmplitudeWarning


class ClassicalParams(object):
    """Parameters of the classical mode equation

        d alpha / dt = gamma1 alpha - gamma2 |alpha|^2 alpha + Omega.
    """

    __slots__ = ('gamma1', 'gamma2', 'omega_drive')

    def __init__(self, gamma1, gamma2, omega_drive=0.0):
        """Initialisation.

        Parameters
        ----------
        gamma1 : float
            Net linear gain, may be negative.
        gamma2 : float
            Nonlinear damping rate, > 0.
        omega_drive : float
            Drive amplitude, >= 0.

        Raises
        ------
        pyvdp.util.errors.InvalidParameterError
            If gamma2 is not strictly positive or the drive is negative.

        """
        values = (gamma1, gamma2, omega_drive)
        if not all(math.isfinite(float(v)) for v in values):
            raise InvalidParameterError(
                "Classical parameters should be finite, got {}.".format(
                    values))
        if gamma2 <= 0:
            raise InvalidParameterError(
                "Field 'gamma2' should be strictly positive, got {}.".format(
                    gamma2))
        if omega_drive < 0:
            raise InvalidParameterError(
                "Field 'omega_drive' should be non-negative, got {}.".format(
                    omega_drive))
        self.gamma1 = float(gamma1)
        self.gamma2 = float(gamma2)
        self.omega_drive = float(omega_drive)

    @classmethod
    def from_vdp(cls, params):
        """Classical counterpart of quantum model parameters.

        Parameters
        ----------
        params : pyvdp.model.VdpParams
            Quantum model rates; the drive enters with its magnitude.

        Returns
        -------
        ClassicalParams
            Parameters with gamma1 = (gamma1_plus - gamma1_minus) / 2.

        """
        return cls(params.gamma1, params.gamma2, abs(params.omega_drive))

    def __repr__(self):
        return 'ClassicalParams(gamma1={!r}, gamma2={!r}, ' \
               'omega_drive={!r})'.format(self.gamma1, self.gamma2,
                                          self.omega_drive)


def _scalar_or_array(value, like):
    if np.ndim(like) == 0:
        return float(value)
    return value


def _principal_power(z, exponent):
    """Principal value of z**exponent, equal to 0 at z = 0."""
    return np.abs(z) ** exponent * np.exp(1j * exponent * np.angle(z))


#: Largest relative imaginary part left by the Cardano expression.
CARDANO_IMAG_TOL = 1e-9


def cardano_root(x):
    """Cardano expression of the stable root before taking its real part.

    The two principal-value cube roots are complex conjugates, or real up
    to the phase factors, so the imaginary part is rounding only.

    Parameters
    ----------
    x : numpy.ndarray
        Finite scaled gains.

    Returns
    -------
    numpy.ndarray
        Complex values whose real parts approximate f(x).

    """
    root = np.sqrt((0.25 - x ** 3 / 27.).astype(complex))
    sign = np.sign(x).astype(complex)
    return _principal_power(0.5 + root, 1. / 3.) + \
        _principal_power(sign, 2. / 3.) * \
        _principal_power(0.5 - root, 1. / 3.)


def classical_f(x):
    """Stable root of the scaled classical steady-state equation.

    Returns the root of x f - f**3 + 1 = 0 that connects continuously to
    f(0) = 1, evaluated with Cardano's expression using principal-value
    complex powers (the second term carries a factor sign(x)**(2/3)) and
    polished with two Newton steps.

    Parameters
    ----------
    x : float or array_like
        Scaled gain gamma1 / (gamma2**(1/3) Omega**(2/3)).

    Returns
    -------
    float or numpy.ndarray
        f(x) > 0.

    """
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)):
        raise InvalidParameterError("classical_f requires finite arguments.")

    z = cardano_root(xs)
    scale = np.maximum(1., np.abs(z.real))
    if np.any(np.abs(z.imag) > CARDANO_IMAG_TOL * scale):
        raise ArithmeticError(
            "The Cardano expression left an imaginary residue.")
    f = z.real

    for _ in range(2):
        slope = 3. * f ** 2 - xs
        f = f - (f ** 3 - xs * f - 1.) / slope
    return _scalar_or_array(f, x)


def classical_f_asymptote(x):
    """Leading asymptotes of `classical_f`.

    Returns sqrt(x) + 1 / (2 x) for positive x and 1 / |x| for negative x;
    f(0) = 1 is returned exactly.
    """
    xs = np.asarray(x, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        result = np.where(xs > 0, np.sqrt(np.abs(xs)) + 0.5 / xs,
                          1. / np.abs(xs))
    result = np.where(xs == 0, 1., result)
    return _scalar_or_array(result, x)


def classical_response(p):
    """Steady-state classical amplitude.

    Parameters
    ----------
    p : ClassicalParams
        Classical parameters.

    Returns
    -------
    float
        alpha = (Omega/gamma2)**(1/3) f(gamma1 / (gamma2**(1/3)
        Omega**(2/3))). Without drive the amplitude is 0 in the damped
        phase; in the limit-cycle phase the radius sqrt(gamma1 / gamma2) is
        returned and a LimitCycleAmplitudeWarning is emitted because the
        phase is undetermined.

    """
    if p.omega_drive == 0:
        if p.gamma1 <= 0:
            return 0.0
        warnings.warn(
            "Without drive the limit-cycle phase is undetermined; returning "
            "the limit-cycle radius.", LimitCycleAmplitudeWarning)
        return math.sqrt(p.gamma1 / p.gamma2)

    omega = p.omega_drive / p.gamma2
    x = (p.gamma1 / p.gamma2) / omega ** (2. / 3.)
    return omega ** (1. / 3.) * classical_f(x)


def classical_chi(p):
    """Classical susceptibility d alpha / d Omega.

    Obtained by differentiating the steady-state equation, which gives
    1 / (3 gamma2 alpha**2 - gamma1). Diverges at the critical point without
    drive, where infinity is returned.
    """
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', LimitCycleAmplitudeWarning)
        alpha = classical_response(p)
    denominator = 3. * p.gamma2 * alpha ** 2 - p.gamma1
    if denominator == 0:
        return math.inf
    return 1. / denominator


def two_level_response(gamma1_minus, omega):
    """Response of the two-level truncation without gain.

    Parameters
    ----------
    gamma1_minus : float
        One-particle loss rate, > 0.
    omega : float
        Drive amplitude.

    Returns
    -------
    float
        2 Omega gamma1_minus / (gamma1_minus**2 + 8 Omega**2).

    """
    if gamma1_minus <= 0:
        raise InvalidParameterError(
            "Field 'gamma1_minus' should be strictly positive, got {}.".format(
                gamma1_minus))
    return 2. * omega * gamma1_minus / (gamma1_minus ** 2 + 8. * omega ** 2)


def three_level_response(gamma1_plus, gamma1_minus, gamma2, omega):
    """Lowest-order response for weak linear rates and drive.

    Returns
    -------
    float
        (2 Omega / gamma2) ((gamma1_plus + gamma1_minus) gamma2 + 8 Omega**2)
        / ((3 gamma1_plus + gamma1_minus)**2 + 8 Omega**2).

    """
    numerator = (gamma1_plus + gamma1_minus) * gamma2 + 8. * omega ** 2
    denominator = (3. * gamma1_plus + gamma1_minus) ** 2 + 8. * omega ** 2
    if denominator == 0:
        # no linear rates and no drive
        return 0.0
    return 2. * omega / gamma2 * numerator / denominator


def three_level_chi(gamma1_plus, gamma1_minus):
    """Zero-drive slope of `three_level_response`,
    2 (gamma1_plus + gamma1_minus) / (3 gamma1_plus + gamma1_minus)**2."""
    return 2. * (gamma1_plus + gamma1_minus) / \
        (3. * gamma1_plus + gamma1_minus) ** 2


def three_level_minimum_drive(gamma1_minus, gamma2):
    """Drive at which the damped response has its local minimum."""
    return math.sqrt(gamma1_minus * gamma2) / (2. * math.sqrt(2.))


def critical_chi(Gamma1, gamma2):
    """Weak-drive susceptibility 2 / sqrt(pi Gamma1 gamma2) at the critical
    point gamma1_plus = gamma1_minus = Gamma1 >> gamma2."""
    return 2. / math.sqrt(math.pi * Gamma1 * gamma2)


def critical_gain(Gamma1, gamma2):
    """Sensitivity gain sqrt(Gamma1 / (pi gamma2)) at the critical point."""
    return math.sqrt(Gamma1 / (math.pi * gamma2))


def limitcycle_chi(gamma1_plus, gamma1_minus, gamma2):
    """Weak-drive susceptibility deep in the limit-cycle phase.

    Parameters
    ----------
    gamma1_plus : float
        One-particle gain rate.
    gamma1_minus : float
        One-particle loss rate, smaller than the gain.
    gamma2 : float
        Two-particle loss rate.

    Returns
    -------
    float
        (2 / (3 gamma2)) (1 - 2 gamma1_minus / (3 gamma1_plus)), accurate to
        first order in gamma1_minus / gamma1_plus.

    """
    return 2. / (3. * gamma2) * (1. - 2. * gamma1_minus / (3. * gamma1_plus))


def limitcycle_gain(gamma1_plus, gamma1_minus, gamma2):
    """Sensitivity gain of the limit-cycle susceptibility over 2 /
    gamma1_minus."""
    return limitcycle_chi(gamma1_plus, gamma1_minus, gamma2) * \
        gamma1_minus / 2.


def limitcycle_gaussian(gamma1_plus, gamma1_minus, gamma2):
    """Mean and standard deviation of the undriven limit-cycle number
    distribution.

    Returns
    -------
    mean : float
        (gamma1_plus - gamma1_minus) / (2 gamma2)
    std : float
        sqrt((3 gamma1_plus - gamma1_minus) / (4 gamma2))

    """
    mean = (gamma1_plus - gamma1_minus) / (2. * gamma2)
    std = math.sqrt((3. * gamma1_plus - gamma1_minus) / (4. * gamma2))
    return mean, std


def critical_population_profile(Gamma1, gamma2, n):
    """Half-Gaussian populations at the critical point.

    Parameters
    ----------
    Gamma1 : float
        Mean linear rate, > 0.
    gamma2 : float
        Two-particle loss rate.
    n : int or array_like
        Fock level(s).

    Returns
    -------
    float or numpy.ndarray
        (2 eps / sqrt(pi)) exp(-x**2) with x = n eps and
        eps = sqrt(gamma2 / Gamma1).

    """
    if Gamma1 <= 0:
        raise InvalidParameterError(
            "Field 'Gamma1' should be strictly positive, got {}.".format(
                Gamma1))
    eps = math.sqrt(gamma2 / Gamma1)
    x = np.asarray(n, dtype=float) * eps
    return _scalar_or_array(2. * eps / math.sqrt(math.pi) * np.exp(-x ** 2), n)


def critical_coherence_profile(Gamma1, gamma2, n, omega):
    """Weighted coherences sqrt(n) rho[n, n-1] at the critical point.

    Returns (4 eta / sqrt(pi)) x exp(-x**2) with x = n sqrt(gamma2 / Gamma1)
    and eta = Omega / Gamma1, valid to first order in the drive.
    """
    eps = math.sqrt(gamma2 / Gamma1)
    eta = omega / Gamma1
    x = np.asarray(n, dtype=float) * eps
    return _scalar_or_array(
        4. * eta / math.sqrt(math.pi) * x * np.exp(-x ** 2), n)


def _limitcycle_scales(gamma1_plus, gamma1_minus, gamma2, n):
    if gamma1_plus <= gamma1_minus:
        raise InvalidParameterError(
            "The limit-cycle profiles require gamma1_plus > gamma1_minus, "
            "got {} <= {}.".format(gamma1_plus, gamma1_minus))
    eps = math.sqrt(gamma2 / gamma1_plus)
    zeta = gamma1_minus / gamma1_plus
    beta = (1. - zeta) / 2.
    y = np.asarray(n, dtype=float) * eps - beta / eps
    return eps, zeta, y


def limitcycle_population_profile(gamma1_plus, gamma1_minus, gamma2, n):
    """Gaussian populations of the undriven limit cycle.

    Returns eps sqrt(2 / ((3 - zeta) pi)) exp(-2 y**2 / (3 - zeta)) with
    eps = sqrt(gamma2 / gamma1_plus), zeta = gamma1_minus / gamma1_plus and
    y = n eps - (1 - zeta) / (2 eps).
    """
    eps, zeta, y = _limitcycle_scales(gamma1_plus, gamma1_minus, gamma2, n)
    profile = eps * math.sqrt(2. / ((3. - zeta) * math.pi)) * \
        np.exp(-2. * y ** 2 / (3. - zeta))
    return _scalar_or_array(profile, n)


def limitcycle_coherence_profile(gamma1_plus, gamma1_minus, gamma2, n,
                                 omega):
    """Coherences rho[n, n-1] of the weakly driven limit cycle.

    Returns 4 eta (3 - zeta)**(-3/2) sqrt((1 - zeta) / pi)
    exp(-2 y**2 / (3 - zeta)) with eta = Omega / gamma1_plus and the scales
    of `limitcycle_population_profile`.
    """
    eps, zeta, y = _limitcycle_scales(gamma1_plus, gamma1_minus, gamma2, n)
    eta = omega / gamma1_plus
    profile = 4. * eta * (3. - zeta) ** -1.5 * \
        math.sqrt((1. - zeta) / math.pi) * np.exp(-2. * y ** 2 / (3. - zeta))
    return _scalar_or_array(profile, n)


def regime_flags(params):
    """Classify a parameter set into the regimes of the asymptotic formulas.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.

    Returns
    -------
    dict
        Booleans keyed by regime name:

        - quantum_linear: no linear rates and a drive far below gamma2,
        - three_level: linear rates and drive well below gamma2,
        - critical_gaussian: gain equal to loss within 5%, both >= 10 gamma2,
        - limit_cycle: net gain of at least 10 gamma2,
        - classical: classical amplitude of at least 1 at a nonzero drive.

    """
    gp, gm, g2 = params.gamma1_plus, params.gamma1_minus, params.gamma2
    omega = abs(params.omega_drive)
    Gamma1 = params.Gamma1

    with warnings.catch_warnings():
        warnings.simplefilter('ignore', LimitCycleAmplitudeWarning)
        alpha = classical_response(ClassicalParams.from_vdp(params))

    return {
        'quantum_linear': gp == 0 and gm == 0 and omega <= 0.1 * g2,
        'three_level': gp <= 0.1 * g2 and gm <= 0.1 * g2 and
        omega <= 0.1 * g2,
        'critical_gaussian': Gamma1 >= 10. * g2 and
        abs(gp - gm) <= 0.05 * Gamma1,
        'limit_cycle': gp - gm >= 10. * g2,
        'classical': omega > 0 and alpha >= 1.,
    }


def oracle_response(params):
    """Response predicted by the asymptotic formula of the applicable regime.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.

    Returns
    -------
    name : str or None
        Name of the formula used, None when no regime applies.
    value : float
        Predicted response, NaN when no regime applies.

    """
    flags = regime_flags(params)
    gp, gm, g2 = params.gamma1_plus, params.gamma1_minus, params.gamma2
    omega = params.omega_drive

    if flags['quantum_linear']:
        return 'quantum_linear', 2. * omega / g2
    if flags['three_level']:
        return 'three_level', three_level_response(gp, gm, g2, omega)
    if flags['classical']:
        return 'classical', math.copysign(
            classical_response(ClassicalParams.from_vdp(params)), omega)
    if flags['critical_gaussian']:
        return 'critical_gaussian', critical_chi(params.Gamma1, g2) * omega
    if flags['limit_cycle']:
        return 'limit_cycle', limitcycle_chi(gp, gm, g2) * omega
    return None, math.nan


def oracle_chi(params):
    """Weak-drive susceptibility predicted for the applicable regime.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.

    Returns
    -------
    name : str or None
        Name of the formula used, None when no regime applies.
    value : float
        Predicted susceptibility, NaN when no regime applies.

    """
    flags = regime_flags(params)
    gp, gm, g2 = params.gamma1_plus, params.gamma1_minus, params.gamma2

    if flags['quantum_linear']:
        return 'quantum_linear', 2. / g2
    if flags['three_level']:
        return 'three_level', three_level_chi(gp, gm)
    if flags['classical']:
        return 'classical', classical_chi(ClassicalParams.from_vdp(params))
    if flags['critical_gaussian']:
        return 'critical_gaussian', critical_chi(params.Gamma1, g2)
    if flags['limit_cycle']:
        return 'limit_cycle', limitcycle_chi(gp, gm, g2)
    return None, math.nan
