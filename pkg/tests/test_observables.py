"""Module grouping tests for the pyvdp.observables module."""

import math
import warnings

import numpy as np
import pytest

from pyvdp.analytic import (
    critical_gain,
    three_level_response,
    two_level_response,
)
from pyvdp.model import DensityMatrix, Truncation, VdpParams
from pyvdp.observables import (
    coherence_profile,
    fit_half_gaussian_width,
    gain0,
    mean_number,
    noise_sigma,
    number_distribution,
    number_moments,
    passive_chi,
    response,
    response_point,
    snr,
    susceptibility,
)
from pyvdp.steady import initial_truncation, solve_steady
from pyvdp.util.errors import (
    InvalidParameterError,
    NegativeVarianceWarning,
    NonRealResponse,
    PassiveUndefined,
)


def local_extrema(values):
    """Indices of the interior local maxima and minima of a sequence."""
    maxima = [i for i in range(1, len(values) - 1)
              if values[i - 1] < values[i] > values[i + 1]]
    minima = [i for i in range(1, len(values) - 1)
              if values[i - 1] > values[i] < values[i + 1]]
    return maxima, minima


class TestStateObservables(object):
    """Class grouping tests for the observables of a single density
    matrix."""

    def test_response_diagonal(self):
        """Test that a diagonal state has no response."""
        assert response(DensityMatrix(np.diag([0.5, 0.3, 0.2]))) == 0

    def test_response_single_coherence(self):
        """Test the response of a single coherence rho[1, 0]."""
        entries = np.diag([0.5, 0.5, 0.])
        entries[1, 0] = entries[0, 1] = 0.1
        assert response(DensityMatrix(entries)) == pytest.approx(0.1)

    def test_response_non_real(self):
        """Test whether an imaginary response is rejected."""
        entries = np.diag([0.5, 0.5, 0.]).astype(complex)
        entries[1, 0] = 0.1j
        entries[0, 1] = -0.1j
        with pytest.raises(NonRealResponse):
            response(DensityMatrix(entries))

    def test_coherent_state(self, coherent_state):
        """Test response, noise and signal-to-noise ratio of a coherent
        state.

        Parameters
        ----------
        coherent_state : pytest.fixture providing pyvdp.model.DensityMatrix
            Coherent state with alpha = 0.5.

        """
        assert response(coherent_state) == pytest.approx(0.5, abs=1e-8)
        assert noise_sigma(coherent_state) == pytest.approx(
            1. / math.sqrt(2.), abs=1e-6)
        assert snr(coherent_state) == pytest.approx(0.5 * math.sqrt(2.),
                                                    abs=1e-5)
        assert coherence_profile(coherent_state).sum() == pytest.approx(
            response(coherent_state))

    def test_number_states(self):
        """Test the noise of the vacuum and of |1>."""
        vacuum = DensityMatrix.vacuum(5)
        assert noise_sigma(vacuum) == pytest.approx(math.sqrt(0.5))
        assert snr(vacuum) == 0
        assert noise_sigma(DensityMatrix.fock(5, 1)) == pytest.approx(
            math.sqrt(1.5))

    def test_negative_variance(self):
        """Test that a negative variance is clamped with a warning."""
        entries = np.diag([0.5, 0.5, 0.])
        entries[1, 0] = entries[0, 1] = 1.2
        with pytest.warns(NegativeVarianceWarning):
            assert noise_sigma(DensityMatrix(entries)) == 0

    def test_padding_invariance(self, coherent_state):
        """Test that unoccupied extra levels change nothing.

        Parameters
        ----------
        coherent_state : pytest.fixture providing pyvdp.model.DensityMatrix
            Coherent state with alpha = 0.5.

        """
        padded = coherent_state.padded(30)
        for fn in (response, mean_number, noise_sigma):
            assert fn(padded) == pytest.approx(fn(coherent_state), abs=1e-15)

    def test_number_distribution(self, coherent_state):
        """Test the populations of a coherent state.

        Parameters
        ----------
        coherent_state : pytest.fixture providing pyvdp.model.DensityMatrix
            Coherent state with alpha = 0.5.

        """
        p = number_distribution(coherent_state)
        assert p.sum() == pytest.approx(1.)
        assert np.all(p >= -1e-10)
        assert number_distribution(DensityMatrix.vacuum(4))[0] == 1.

    def test_number_moments(self):
        """Test the moments of a small distribution."""
        mean, std = number_moments([0.25, 0.5, 0.25])
        assert mean == pytest.approx(1.)
        assert std == pytest.approx(math.sqrt(0.5))

    def test_half_gaussian_width(self):
        """Test the fitted width of an exact half-Gaussian."""
        n = np.arange(60)
        p = np.exp(-(n / 10.) ** 2)
        assert fit_half_gaussian_width(p / p.sum()) == pytest.approx(
            10., rel=1e-6)

    def test_half_gaussian_narrow(self):
        """Test that narrow distributions return their moment width without
        warnings."""
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            assert fit_half_gaussian_width([1., 0., 0., 0.]) == 0.
            assert fit_half_gaussian_width(
                [0.9, 0.1, 0., 0.]) == pytest.approx(math.sqrt(0.2))

    def test_half_gaussian_vacuum_state(self):
        """Test the width of the populations of the vacuum state."""
        p = number_distribution(DensityMatrix.vacuum(15))
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            assert fit_half_gaussian_width(p) == 0.


class TestSusceptibility(object):
    """Class grouping tests for pyvdp.observables.susceptibility and
    pyvdp.observables.gain0."""

    def test_quantum_linear(self):
        """Test chi gamma2 = 2 without linear rates."""
        chi = susceptibility(VdpParams(), 1e-4)
        assert chi.chi == pytest.approx(2., rel=0.02)
        assert math.isfinite(chi.estimate_error)
        assert chi.step > 0

    def test_zero_drive(self):
        """Test the zero-drive susceptibility of a damped oscillator."""
        chi = susceptibility(VdpParams(0., 0.01, 1.), 0.)
        assert chi.chi == pytest.approx(2. / 0.01, rel=0.03)

    def test_weak_gain(self):
        """Test the zero-drive susceptibility with weak gain only."""
        chi = susceptibility(VdpParams(0.01, 0., 1.), 0.)
        assert chi.chi == pytest.approx(2. / (9. * 0.01), rel=0.03)

    def test_default_drive(self):
        """Test that the drive of the parameters is used by default."""
        params = VdpParams(0., 1., 1., 0.3)
        assert susceptibility(params).omega_at == 0.3

    def test_negative_drive(self):
        """Test whether a negative evaluation drive is rejected."""
        with pytest.raises(InvalidParameterError):
            susceptibility(VdpParams(0., 1., 1.), -1.)

    def test_shared_truncation(self):
        """Test that all solves share one truncation."""
        chi = susceptibility(VdpParams(0., 1., 1.), 0.5, Truncation(10))
        assert chi.n_levels >= 10

    def test_passive_undefined(self):
        """Test the passive susceptibility without loss."""
        assert passive_chi(4.) == 0.5
        with pytest.raises(PassiveUndefined):
            passive_chi(0.)
        with pytest.raises(PassiveUndefined):
            gain0(VdpParams(1., 0., 1.))

    def test_gain_crosses_one(self):
        """Test that the critical gain exceeds 1 only for strong enough
        linear rates."""
        assert gain0(VdpParams(2., 2., 1.)) < 1
        assert gain0(VdpParams(5., 5., 1.)) > 1

    @pytest.mark.slow
    def test_critical_gaussian(self):
        """Test the critical susceptibility and the half-Gaussian width at
        Gamma1 = 1000 gamma2."""
        params = VdpParams(1000., 1000., 1.)
        chi = susceptibility(params, 0.)
        assert chi.chi == pytest.approx(2. / math.sqrt(1000. * math.pi),
                                        rel=0.05)
        assert critical_gain(1000., 1.) == pytest.approx(17.84, rel=1e-3)
        assert gain0(params) == pytest.approx(17.84, rel=0.05)

        p = number_distribution(solve_steady(params).rho)
        assert fit_half_gaussian_width(p) == pytest.approx(
            math.sqrt(1000.), rel=0.05)

    @pytest.mark.slow
    def test_limit_cycle(self):
        """Test the limit-cycle susceptibility and number statistics."""
        params = VdpParams(200., 20., 1.)
        chi = susceptibility(params, 0.)
        assert chi.chi == pytest.approx(0.6222, rel=0.1)

        mean, std = number_moments(number_distribution(
            solve_steady(params).rho))
        assert mean == pytest.approx(90., rel=0.05)
        assert std == pytest.approx(math.sqrt(145.), rel=0.05)

    @pytest.mark.slow
    def test_limit_cycle_gain(self):
        """Test the sensitivity gain of about 10 at gamma1_minus = 30 and
        gamma1_plus = 600."""
        params = VdpParams(600., 30., 1.)
        trunc = initial_truncation(params, n_max=400)
        assert gain0(params, trunc) == pytest.approx(10., rel=0.15)


class TestResponseCurve(object):
    """Class grouping tests for the shape of the response versus drive."""

    def test_response_point(self):
        """Test the observables collected at a single drive."""
        point = response_point(VdpParams(0., 1., 1., 0.3))
        assert point.omega_drive == 0.3
        assert point.sigma >= 0
        assert point.mean_n >= 0
        assert point.snr == pytest.approx(point.response / point.sigma)

    def test_damped_non_monotonic(self):
        """Test the maximum and minimum of the weakly damped response."""
        gamma1_minus = 0.02
        drives = np.logspace(-3., -0.5, 101)
        values = [response(solve_steady(
            VdpParams(0., gamma1_minus, 1., w)).rho) for w in drives]

        maxima, minima = local_extrema(values)
        assert len(maxima) == 1
        assert len(minima) == 1
        assert maxima[0] < minima[0]

        peak = max(two_level_response(gamma1_minus, w) for w in drives)
        assert values[maxima[0]] == pytest.approx(peak, rel=0.15)
        assert values[maxima[0]] == pytest.approx(1. / (2. * math.sqrt(2.)),
                                                  rel=0.15)

        expected = math.sqrt(gamma1_minus) / (2. * math.sqrt(2.))
        assert drives[minima[0]] == pytest.approx(expected, rel=0.2)

    @pytest.mark.parametrize('omega', np.logspace(-4., math.log10(0.05), 9))
    def test_three_level_response(self, omega):
        """Test the weakly damped response against the three-level formula.

        Parameters
        ----------
        omega : float
            Drive amplitude.

        """
        params = VdpParams(0., 0.02, 1., omega)
        assert response(solve_steady(params).rho) == pytest.approx(
            three_level_response(0., 0.02, 1., omega), rel=0.05)
