"""Module grouping tests for the pyvdp.analytic module."""

import math

import numpy as np
import pytest

from pyvdp.analytic import (
    ClassicalParams,
    cardano_root,
    classical_chi,
    classical_f,
    classical_f_asymptote,
    classical_response,
    critical_chi,
    critical_gain,
    critical_population_profile,
    limitcycle_chi,
    limitcycle_gain,
    limitcycle_gaussian,
    limitcycle_population_profile,
    oracle_chi,
    oracle_response,
    regime_flags,
    three_level_chi,
    three_level_minimum_drive,
    three_level_response,
    two_level_response,
)
from pyvdp.model import VdpParams
from pyvdp.util.errors import (
    InvalidParameterError,
    LimitCycleAmplitudeWarning,
)


class TestClassicalF(object):
    """Class grouping tests for pyvdp.analytic.classical_f."""

    def test_origin(self):
        """Test f(0) = 1."""
        assert classical_f(0.) == pytest.approx(1., abs=1e-15)

    def test_residual(self):
        """Test the relative residual of the cubic on a dense grid."""
        x = np.linspace(-50., 50., 1001)
        f = classical_f(x)
        residual = np.abs(x * f - f ** 3 + 1.)
        scale = np.maximum(1., np.maximum(np.abs(x * f), f ** 3))
        assert np.all(residual <= 1e-12 * scale)
        assert np.all(f > 0)

    def test_continuous(self):
        """Test that the stable root has no jumps."""
        x = np.linspace(-5., 5., 10001)
        assert np.max(np.abs(np.diff(classical_f(x)))) < 1e-2

    def test_scalar(self):
        """Test that a scalar argument gives a float."""
        assert isinstance(classical_f(2.), float)

    def test_non_finite(self):
        """Test whether non-finite arguments are rejected."""
        with pytest.raises(InvalidParameterError):
            classical_f(float('nan'))

    def test_positive_asymptote(self):
        """Test the order of the error of the large-x asymptote."""
        error = [abs(classical_f(x) - math.sqrt(x) - 0.5 / x)
                 for x in (1e2, 1e3)]
        assert error[1] < error[0] / 100.
        assert classical_f_asymptote(1e3) == pytest.approx(
            math.sqrt(1e3) + 0.5e-3)

    def test_negative_asymptote(self):
        """Test f ~ 1 / |x| for large negative x."""
        assert classical_f(-1e3) == pytest.approx(1e-3, rel=1e-6)
        assert classical_f_asymptote(-1e3) == pytest.approx(1e-3)
        assert classical_f_asymptote(0.) == 1.

    @pytest.mark.parametrize('x', [
        np.linspace(-1e3, 1e3, 2001),
        np.array([3. / 4. ** (1. / 3.), -1e6, 1e6, 0.])])
    def test_imaginary_residue(self, x):
        """Test that the Cardano expression is real up to rounding.

        Parameters
        ----------
        x : numpy.ndarray
            Scaled gains, including the branch point of the square root.

        """
        z = cardano_root(x)
        assert np.all(np.abs(z.imag) <= 1e-9 * np.maximum(1., np.abs(z.real)))
        assert np.allclose(z.real, classical_f(x), rtol=1e-8, atol=1e-12)


class TestClassicalResponse(object):
    """Class grouping tests for the classical amplitude and
    susceptibility."""

    def test_critical_drive(self):
        """Test alpha = (Omega / gamma2)**(1/3) without linear gain."""
        assert classical_response(ClassicalParams(0., 1., 10.)) == \
            pytest.approx(10. ** (1. / 3.))

    def test_undriven(self):
        """Test the undriven amplitude in both phases."""
        assert classical_response(ClassicalParams(-1., 1., 0.)) == 0
        with pytest.warns(LimitCycleAmplitudeWarning):
            assert classical_response(ClassicalParams(4., 1., 0.)) == 2.

    def test_steady_state_equation(self):
        """Test that the amplitude solves the classical mode equation."""
        p = ClassicalParams(-0.3, 2., 0.7)
        alpha = classical_response(p)
        assert p.gamma1 * alpha - p.gamma2 * alpha ** 3 + p.omega_drive == \
            pytest.approx(0., abs=1e-12)

    def test_passive_susceptibility(self):
        """Test chi = 2 / gamma1_minus for an undriven damped
        oscillator."""
        p = ClassicalParams.from_vdp(VdpParams(0., 4., 1.))
        assert classical_chi(p) == pytest.approx(0.5)

    def test_critical_divergence(self):
        """Test the divergence at the critical point."""
        assert classical_chi(ClassicalParams(0., 1., 0.)) == math.inf

    def test_from_vdp_uses_magnitude(self):
        """Test that a negative drive maps onto its magnitude."""
        p = ClassicalParams.from_vdp(VdpParams(3., 1., 1., -0.5))
        assert p.gamma1 == 1.
        assert p.omega_drive == 0.5

    @pytest.mark.parametrize('args', [(0., 0., 1.), (0., 1., -1.),
                                      (float('inf'), 1., 1.)])
    def test_invalid(self, args):
        """Test whether invalid classical parameters are rejected.

        Parameters
        ----------
        args : tuple
            Invalid gamma1, gamma2 and drive.

        """
        with pytest.raises(InvalidParameterError):
            ClassicalParams(*args)


class TestQuantumFormulas(object):
    """Class grouping tests for the closed-form quantum predictions."""

    def test_two_level_peak(self):
        """Test the peak 1 / (2 sqrt(2)) of the two-level response."""
        for gamma1_minus in (0.01, 0.02):
            omega = gamma1_minus / (2. * math.sqrt(2.))
            assert two_level_response(gamma1_minus, omega) == \
                pytest.approx(1. / (2. * math.sqrt(2.)))
        with pytest.raises(InvalidParameterError):
            two_level_response(0., 1.)

    def test_three_level_slopes(self):
        """Test the zero-drive slopes 2 / gamma1_minus and
        2 / (9 gamma1_plus)."""
        assert three_level_chi(0., 0.01) == pytest.approx(200.)
        assert three_level_chi(0.01, 0.) == pytest.approx(2. / 0.09)
        delta = 1e-9
        assert three_level_response(0.01, 0.02, 1., delta) / delta == \
            pytest.approx(three_level_chi(0.01, 0.02), rel=1e-6)
        assert three_level_response(0., 0., 1., 0.) == 0.

    def test_three_level_minimum(self):
        """Test the drive of the damped response minimum."""
        assert three_level_minimum_drive(0.02, 1.) == pytest.approx(0.05)
        drives = np.linspace(0.03, 0.08, 501)
        values = [three_level_response(0., 0.02, 1., w) for w in drives]
        assert drives[int(np.argmin(values))] == pytest.approx(0.05,
                                                               rel=0.1)

    def test_critical(self):
        """Test the critical susceptibility and gain at Gamma1 = 1000."""
        assert critical_chi(1000., 1.) == pytest.approx(0.035682, rel=1e-4)
        assert critical_gain(1000., 1.) == pytest.approx(17.841, rel=1e-4)

    def test_limit_cycle(self):
        """Test the limit-cycle susceptibility, gain and statistics."""
        assert limitcycle_chi(200., 20., 1.) == pytest.approx(0.62222,
                                                              rel=1e-4)
        assert limitcycle_gain(600., 30., 1.) == pytest.approx(
            limitcycle_chi(600., 30., 1.) * 15.)
        mean, std = limitcycle_gaussian(200., 20., 1.)
        assert mean == 90.
        assert std == pytest.approx(12.042, rel=1e-4)

    def test_population_profiles(self):
        """Test the normalization of the population profiles."""
        n = np.arange(400)
        critical = critical_population_profile(1000., 1., n)
        assert critical.sum() == pytest.approx(1., rel=0.03)
        limit_cycle = limitcycle_population_profile(200., 20., 1., n)
        assert limit_cycle.sum() == pytest.approx(1., rel=0.01)
        assert int(np.argmax(limit_cycle)) == 90
        with pytest.raises(InvalidParameterError):
            limitcycle_population_profile(20., 200., 1., n)


class TestRegimes(object):
    """Class grouping tests for the regime classification and oracles."""

    def test_flags(self):
        """Test the classification of representative parameter sets."""
        assert regime_flags(VdpParams(omega_drive=0.01))['quantum_linear']
        assert regime_flags(VdpParams(1000., 1000., 1.))['critical_gaussian']
        assert regime_flags(VdpParams(200., 20., 1.))['limit_cycle']
        assert regime_flags(VdpParams(omega_drive=10.))['classical']
        assert not any(regime_flags(VdpParams(5., 5., 1.)).values())

    def test_oracle_response(self):
        """Test the response oracle."""
        assert oracle_response(VdpParams(omega_drive=0.01)) == \
            ('quantum_linear', 0.02)
        name, value = oracle_response(VdpParams(omega_drive=10.))
        assert name == 'classical'
        assert value == pytest.approx(10. ** (1. / 3.))
        name, value = oracle_response(VdpParams(omega_drive=-10.))
        assert value == pytest.approx(-10. ** (1. / 3.))

    def test_oracle_chi(self):
        """Test the susceptibility oracle."""
        assert oracle_chi(VdpParams(0., 0.01, 1.)) == \
            ('three_level', pytest.approx(200.))
        name, value = oracle_chi(VdpParams(5., 5., 1.))
        assert name is None
        assert math.isnan(value)
