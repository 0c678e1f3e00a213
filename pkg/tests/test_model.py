"""Module grouping tests for the pyvdp.model module."""

import warnings

import numpy as np
import pytest

from pyvdp.model import (
    DensityMatrix,
    Truncation,
    VdpParams,
    apply_liouvillian,
    build_liouvillian,
    mode_equation_residual,
)
from pyvdp.util.errors import (
    CapacityError,
    DimensionMismatchError,
    InvalidParameterError,
    TruncationWarning,
)


def random_hermitian(n_levels, seed):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((n_levels, n_levels)) + \
        1j * rng.standard_normal((n_levels, n_levels))
    return (x + x.conj().T) / 2.


def unvec(liouvillian, x):
    """Apply the generator matrix to the square matrix x."""
    return DensityMatrix.from_vector(
        liouvillian.matrix @ x.reshape(-1, order='F'),
        liouvillian.n_levels).entries


class TestVdpParams(object):
    """Class grouping tests for the pyvdp.model.VdpParams class."""

    def test_derived_rates(self):
        """Test the net gain and mean linear rate."""
        p = VdpParams(3., 1., 2., 0.5)
        assert p.gamma1 == 1.
        assert p.Gamma1 == 2.

    @pytest.mark.parametrize('kwargs', [
        {'gamma2': 0.}, {'gamma2': -1.}, {'gamma1_plus': -0.1},
        {'gamma1_minus': float('nan')}, {'omega_drive': float('inf')}])
    def test_invalid(self, kwargs):
        """Test whether rates outside their domain are rejected.

        Parameters
        ----------
        kwargs : dict
            Invalid keyword arguments.

        """
        with pytest.raises(InvalidParameterError):
            VdpParams(**kwargs)

    def test_negative_drive(self):
        """Test whether a drive with phase pi is accepted."""
        assert VdpParams(omega_drive=-0.5).omega_drive == -0.5

    def test_replace_derived(self):
        """Test replacing Gamma1 keeps the net gain fixed."""
        p = VdpParams(3., 1., 1.).replace(Gamma1=10.)
        assert p.gamma1 == 1.
        assert p.gamma1_plus == 11.
        assert p.gamma1_minus == 9.

    def test_replace_unknown(self):
        """Test whether an unknown field is rejected."""
        with pytest.raises(InvalidParameterError):
            VdpParams().replace(detuning=1.)

    def test_scaled(self):
        """Test rescaling to units of gamma2."""
        p = VdpParams(4., 2., 2., 1.).in_units_of_gamma2()
        assert p == VdpParams(2., 1., 1., 0.5)


class TestTruncation(object):
    """Class grouping tests for the pyvdp.model.Truncation class."""

    @pytest.mark.parametrize('args', [(2,), (3.5,), (10, 0.), (10, 1.),
                                      (10, 1e-6, 5)])
    def test_invalid(self, args):
        """Test whether inconsistent policies are rejected.

        Parameters
        ----------
        args : tuple
            Invalid positional arguments.

        """
        with pytest.raises(InvalidParameterError):
            Truncation(*args)

    def test_grown(self):
        """Test the adaptive growth sequence and its cap."""
        trunc = Truncation(20, n_max=26)
        assert trunc.grown().n_levels == 25
        assert trunc.grown().grown().n_levels == 26
        assert trunc.grown().grown().grown() is None

    def test_with_levels_raises_cap(self):
        """Test whether with_levels raises n_max when needed."""
        trunc = Truncation(10, n_max=20).with_levels(30)
        assert trunc.n_levels == 30
        assert trunc.n_max == 30


class TestDensityMatrix(object):
    """Class grouping tests for the pyvdp.model.DensityMatrix class."""

    def test_column_stacking(self):
        """Test whether vectorization stacks columns."""
        rho = DensityMatrix([[1., 2.], [3., 4.]])
        assert list(rho.to_vector().real) == [1., 3., 2., 4.]
        back = DensityMatrix.from_vector(rho.to_vector())
        assert np.array_equal(back.entries, rho.entries)

    def test_not_square(self):
        """Test whether a non-square matrix is rejected."""
        with pytest.raises(DimensionMismatchError):
            DensityMatrix(np.zeros((2, 3)))

    def test_coherent(self, coherent_state):
        """Test the truncated coherent state.

        Parameters
        ----------
        coherent_state : pytest.fixture providing pyvdp.model.DensityMatrix
            Coherent state with alpha = 0.5.

        """
        assert coherent_state.is_normalized()
        assert coherent_state.is_physical()

    def test_random_physical(self):
        """Test whether random states are physical and reproducible."""
        rho = DensityMatrix.random_physical(8, seed=3)
        assert rho.is_physical()
        assert rho.is_normalized()
        assert np.array_equal(
            rho.entries, DensityMatrix.random_physical(8, seed=3).entries)

    def test_padded(self, coherent_state):
        """Test embedding in a larger space.

        Parameters
        ----------
        coherent_state : pytest.fixture providing pyvdp.model.DensityMatrix
            Coherent state with alpha = 0.5.

        """
        padded = coherent_state.padded(25)
        assert padded.dim == 25
        assert np.array_equal(padded.entries[:20, :20],
                              coherent_state.entries)
        with pytest.raises(DimensionMismatchError):
            coherent_state.padded(10)


class TestLiouvillian(object):
    """Class grouping tests for pyvdp.model.build_liouvillian and
    pyvdp.model.apply_liouvillian."""

    def test_two_particle_loss(self):
        """Test the two-particle loss entries in three levels."""
        L = build_liouvillian(VdpParams(), 3)
        m = L.matrix.toarray()
        assert m[L.index(2, 2), L.index(2, 2)] == pytest.approx(-2.)
        assert m[L.index(0, 0), L.index(2, 2)] == pytest.approx(2.)

    def test_one_particle_loss(self):
        """Test decay of |1><1| with one-particle loss only."""
        L = build_liouvillian(VdpParams(0., 1., 1.), 4)
        rho_dot = L.apply(DensityMatrix.fock(4, 1)).entries
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.
        expected[1, 1] = -1.
        assert np.allclose(rho_dot, expected, atol=1e-14)

    def test_drive_balanced_populations(self):
        """Test that the drive does not build coherence between equally
        occupied levels."""
        rho = DensityMatrix(np.diag([0.5, 0.5, 0., 0.]))
        params = VdpParams(0., 0., 1., 0.5)
        rho_dot = apply_liouvillian(params, rho).entries
        assert abs(rho_dot[1, 0]) < 1e-15

    def test_vacuum_dark(self):
        """Test that the vacuum is stationary without gain and drive."""
        rho_dot = apply_liouvillian(VdpParams(0., 2., 1.),
                                    DensityMatrix.vacuum(6))
        assert np.max(np.abs(rho_dot.entries)) == 0

    @pytest.mark.parametrize('n_levels', [3, 8, 20])
    def test_trace_and_hermiticity(self, n_levels):
        """Test whether the generator annihilates the trace and preserves
        Hermiticity.

        Parameters
        ----------
        n_levels : int
            Truncation.

        """
        L = build_liouvillian(VdpParams(0.7, 1.3, 1., 0.4), n_levels)
        for seed in range(5):
            x = random_hermitian(n_levels, seed)
            y = unvec(L, x)
            assert abs(np.trace(y)) < 1e-12
            assert np.allclose(y, y.conj().T, atol=1e-12)

    @pytest.mark.parametrize('n_levels', [3, 8, 20])
    def test_matrix_free_agrees(self, n_levels):
        """Test the matrix-free evaluation against the sparse matrix.

        Parameters
        ----------
        n_levels : int
            Truncation.

        """
        params = VdpParams(0.7, 1.3, 1., 0.4)
        L = build_liouvillian(params, n_levels)
        for seed in range(20):
            x = random_hermitian(n_levels, seed)
            direct = apply_liouvillian(params, DensityMatrix(x)).entries
            assert np.max(np.abs(direct - unvec(L, x))) < 1e-12

    def test_undriven_keeps_diagonal(self):
        """Test that without drive diagonal matrices stay diagonal."""
        L = build_liouvillian(VdpParams(0.7, 1.3, 1.), 6)
        y = unvec(L, np.diag(np.arange(1., 7.)))
        assert np.max(np.abs(y - np.diag(np.diagonal(y)))) == 0

    def test_linear_in_rates(self):
        """Test that rescaling all rates rescales the generator."""
        params = VdpParams(0.7, 1.3, 1., 0.4)
        m1 = build_liouvillian(params, 6).matrix
        m3 = build_liouvillian(params.scaled(3.), 6).matrix
        assert abs(m3 - 3. * m1).max() < 1e-12

    def test_deterministic(self):
        """Test whether repeated builds give identical sparse structure."""
        params = VdpParams(0.7, 1.3, 1., 0.4)
        a = build_liouvillian(params, 8).matrix
        b = build_liouvillian(params, 8).matrix
        assert np.array_equal(a.indices, b.indices)
        assert np.array_equal(a.indptr, b.indptr)
        assert np.array_equal(a.data, b.data)

    def test_too_small(self):
        """Test whether fewer than 3 levels are rejected."""
        with pytest.raises(DimensionMismatchError):
            build_liouvillian(VdpParams(), 2)

    def test_capacity(self):
        """Test whether an unindexable superoperator is rejected."""
        with pytest.raises(CapacityError):
            build_liouvillian(VdpParams(), 20000)


class TestModeEquation(object):
    """Class grouping tests for pyvdp.model.mode_equation_residual."""

    def test_vacuum(self):
        """Test that both evaluations give Omega for the vacuum."""
        residual = mode_equation_residual(VdpParams(1., 2., 1., 0.3),
                                          DensityMatrix.vacuum(10))
        assert abs(residual) < 1e-15

    def test_random_state(self):
        """Test a random low-occupation state."""
        rho = DensityMatrix.random_physical(30, seed=1, decay_length=1.)
        residual = mode_equation_residual(VdpParams(0.4, 0.9, 1., 0.3), rho)
        assert abs(residual) < 1e-10

    def test_truncation_warning(self):
        """Test the warning for an occupied top level."""
        rho = DensityMatrix(np.eye(5) / 5.)
        with pytest.warns(TruncationWarning):
            mode_equation_residual(VdpParams(), rho)

    def test_no_warning_below_tail(self):
        """Test that a negligible top level does not warn."""
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            mode_equation_residual(VdpParams(), DensityMatrix.vacuum(5))
