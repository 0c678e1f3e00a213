# -*- coding: utf-8 -*-
"""Module converting between truncated density matrices and Wigner
functions.

Phase space is parametrized as alpha = r exp(i phi) = x + i y. The Wigner
function decomposes into angular channels j,

    W(r, phi) = (2 / pi) [C_0(r) + 2 Re sum_{j >= 1} exp(-i j phi) C_j(r)],

with radial channels C_j(r) = sum_m M_m^(j)(r) rho[m + j, m] built from the
scaled kernel

    M_m^(j)(r) = (-1)^m L_m^(j)(4 r^2) sqrt(m! / (m + j)!) (2 r)^j
                 exp(-2 r^2).

The kernels of one channel are orthogonal with respect to the weight
8 r dr, which inverts the map.
"""
import math

import numpy as np
import pandas as pd
from numpy.polynomial.legendre import leggauss
from scipy.integrate import trapezoid
from scipy.special import gammaln

from pyvdp.model import DensityMatrix
from pyvdp.util.errors import (
    InvalidGridError,
    QuadratureUnderResolved,
    WignerOverflowError,
)
from pyvdp.util.output import write_csv

#: Largest Fock dimension supported by the Wigner transforms.
WIGNER_CAPACITY = 300

#: Maximum elementwise error of the reference round trip.
ROUND_TRIP_TOL = 1e-6

#: Number of times an automatic r_max is enlarged by 25 %.
R_MAX_EXTENSIONS = 8


def laguerre_assoc(n, j, x):
    """Associated Laguerre polynomial L_n^(j)(x).

    Evaluated with the upward recurrence

        (k + 1) L_{k+1} = (2 k + 1 + j - x) L_k - (k + j) L_{k-1}.

    Parameters
    ----------
    n : int
        Degree, >= 0.
    j : int
        Order, >= 0.
    x : float or array_like
        Argument(s), >= 0.

    Returns
    -------
    float or numpy.ndarray
        The polynomial value(s).

    """
    if n < 0 or j < 0:
        raise ValueError("Degree and order should be non-negative.")
    xs = np.asarray(x, dtype=float)
    previous = np.ones_like(xs)
    if n == 0:
        current = previous
    else:
        current = 1. + j - xs
        for k in range(1, n):
            previous, current = current, (
                (2. * k + 1. + j - xs) * current
                - (k + j) * previous) / (k + 1.)
    if np.ndim(x) == 0:
        return float(current)
    return current


def displacement_radial(n_levels, j, r):
    """Scaled radial kernels M_m^(j)(r) for m = 0 .. n_levels - j - 1.

    The kernels are generated by a three-term recurrence in m that starts
    from M_0^(j)(r) = exp(j log(2 r) - 2 r^2 - log(j!) / 2), so no factorial
    or power is ever formed explicitly.

    Parameters
    ----------
    n_levels : int
        Fock dimension N.
    j : int
        Channel, 0 <= j < N.
    r : array_like
        Radii, >= 0.

    Returns
    -------
    numpy.ndarray
        Array of shape (N - j, len(r)).

    Raises
    ------
    pyvdp.util.errors.WignerOverflowError
        If N exceeds the supported capacity or the recurrence produces
        non-finite values.

    """
    if n_levels > WIGNER_CAPACITY:
        raise WignerOverflowError(
            "Wigner transforms support at most {} levels, got {}.".format(
                WIGNER_CAPACITY, n_levels))
    r = np.atleast_1d(np.asarray(r, dtype=float))
    size = n_levels - j
    kernels = np.empty((size, r.size))
    x = 4. * r ** 2

    with np.errstate(divide='ignore', under='ignore'):
        log_start = j * np.log(2. * r) if j > 0 else np.zeros_like(r)
        kernels[0] = np.exp(log_start - 2. * r ** 2 - 0.5 * gammaln(j + 1.))
    if size > 1:
        kernels[1] = -kernels[0] * (1. + j - x) / math.sqrt(j + 1.)
    for m in range(1, size - 1):
        norm = math.sqrt((m + 1.) * (m + 1. + j))
        kernels[m + 1] = (
            -(2. * m + 1. + j - x) / norm * kernels[m]
            - math.sqrt(m * (m + j)) / norm * kernels[m - 1])

    if not np.all(np.isfinite(kernels)):
        raise WignerOverflowError(
            "Radial kernel of channel {} overflowed at N = {}.".format(
                j, n_levels))
    return kernels


def _channels(rho, r):
    """Yield (j, C_j(r)) for every angular channel of `rho`."""
    entries = rho.entries
    for j in range(rho.dim):
        kernels = displacement_radial(rho.dim, j, r)
        yield j, np.diagonal(entries, -j) @ kernels


def wigner_at(rho, r, phi):
    """Wigner function of `rho` at polar phase-space coordinates.

    Parameters
    ----------
    rho : pyvdp.model.DensityMatrix
        Hermitian state.
    r : float or array_like
        Radii |alpha| >= 0.
    phi : float or array_like
        Angles arg(alpha), broadcastable against `r`.

    Returns
    -------
    float or numpy.ndarray
        W(r exp(i phi)), real, in [-2/pi, 2/pi] for physical states.

    """
    r_b, phi_b = np.broadcast_arrays(np.asarray(r, dtype=float),
                                     np.asarray(phi, dtype=float))
    if np.any(r_b < 0):
        raise InvalidGridError("Radii should be non-negative.")
    r_flat, phi_flat = r_b.ravel(), phi_b.ravel()

    values = np.zeros(r_flat.size)
    for j, c_j in _channels(rho, r_flat):
        if j == 0:
            values += c_j.real
        else:
            values += 2. * (np.exp(-1j * j * phi_flat) * c_j).real
    values *= 2. / math.pi

    if r_b.ndim == 0:
        return float(values[0])
    return values.reshape(r_b.shape)


def _wigner_polar(rho, radii, angles):
    """Wigner values on the tensor grid radii x angles."""
    values = np.zeros((radii.size, angles.size))
    for j, c_j in _channels(rho, radii):
        if j == 0:
            values += c_j.real[:, None]
        else:
            values += 2. * np.outer(c_j, np.exp(-1j * j * angles)).real
    return values * 2. / math.pi


def auto_r_max(rho):
    """Default radius 2 + 3 sqrt(<n> + 1) of the sampled phase space."""
    mean_n = float(np.dot(np.arange(rho.dim), rho.populations()))
    return 2. + 3. * math.sqrt(max(mean_n, 0.) + 1.)


class GridSpec(object):
    """Layout of a sampled phase-space grid."""

    def __init__(self, kind='polar', r_max=None, n_radii=200, n_angles=256,
                 n_points=201):
        """Initialisation.

        Parameters
        ----------
        kind : str
            'polar' (Gauss-Legendre radii, uniform angles) or 'cartesian'
            (uniform x and y axes).
        r_max : float, optional
            Radius of the sampled region. Chosen automatically when omitted.
        n_radii : int
            Number of radial nodes of a polar grid.
        n_angles : int
            Number of angles of a polar grid.
        n_points : int
            Number of points per axis of a cartesian grid.

        Raises
        ------
        pyvdp.util.errors.InvalidGridError
            If the layout is inconsistent.

        """
        if kind not in ('polar', 'cartesian'):
            raise InvalidGridError(
                "Grid kind should be 'polar' or 'cartesian', got "
                "{!r}.".format(kind))
        if r_max is not None and not r_max > 0:
            raise InvalidGridError(
                "r_max should be strictly positive, got {!r}.".format(r_max))
        for name, value in (('n_radii', n_radii), ('n_angles', n_angles),
                            ('n_points', n_points)):
            if int(value) != value or value < 2:
                raise InvalidGridError(
                    "{} should be an integer >= 2, got {!r}.".format(
                        name, value))
        self.kind = kind
        self.r_max = r_max
        self.n_radii = int(n_radii)
        self.n_angles = int(n_angles)
        self.n_points = int(n_points)

    def __repr__(self):
        return ('GridSpec(kind={!r}, r_max={!r}, n_radii={!r}, '
                'n_angles={!r}, n_points={!r})').format(
            self.kind, self.r_max, self.n_radii, self.n_angles,
            self.n_points)


class WignerGrid(object):
    """Wigner function sampled on a polar or cartesian grid.

    Polar grids store Gauss-Legendre radii with their weights and uniform
    angles 2 pi k / K; values have shape (n_radii, n_angles). Cartesian grids
    store the x and y axes; values have shape (len(x), len(y)).
    """

    def __init__(self, kind, values, r_max, radii=None, radial_weights=None,
                 angles=None, x=None, y=None):
        self.kind = kind
        self.values = np.asarray(values, dtype=float)
        self.r_max = float(r_max)
        self.radii = radii
        self.radial_weights = radial_weights
        self.angles = angles
        self.x = x
        self.y = y

    @classmethod
    def polar_nodes(cls, r_max, n_radii, n_angles):
        """Quadrature nodes of a polar grid.

        Returns
        -------
        radii, radial_weights, angles : numpy.ndarray
            Gauss-Legendre radii and weights on [0, r_max] and uniform
            angles in [0, 2 pi).

        """
        nodes, weights = leggauss(n_radii)
        radii = 0.5 * r_max * (nodes + 1.)
        radial_weights = 0.5 * r_max * weights
        angles = 2. * math.pi * np.arange(n_angles) / n_angles
        return radii, radial_weights, angles

    def _require_polar(self, what):
        if self.kind != 'polar':
            raise InvalidGridError(
                "{} requires a polar grid, got a {} grid.".format(
                    what, self.kind))

    def _integrate(self, weights):
        """Integral of weights * W over the sampled plane."""
        if self.kind == 'polar':
            d_phi = 2. * math.pi / self.angles.size
            radial = (self.radial_weights * self.radii)[:, None]
            return np.sum(radial * d_phi * weights * self.values)
        inner = trapezoid(weights * self.values, self.y, axis=1)
        return trapezoid(inner, self.x)

    def _alpha(self):
        if self.kind == 'polar':
            return self.radii[:, None] * np.exp(1j * self.angles)[None, :]
        return self.x[:, None] + 1j * self.y[None, :]

    def integral(self):
        """Quadrature of W over the sampled region (1 when converged)."""
        return float(self._integrate(np.ones_like(self.values)))

    def center_of_mass(self):
        """Phase-space mean of alpha, equal to <a>.

        Returns
        -------
        complex
            Integral of alpha W.

        """
        return complex(self._integrate(self._alpha()))

    def second_moment(self):
        """Integral of |alpha|^2 W, equal to <n> + 1/2."""
        return float(self._integrate(np.abs(self._alpha()) ** 2))

    def spread(self):
        """Largest variation of W around any circle of a polar grid."""
        self._require_polar('The angular spread')
        return float(np.max(np.ptp(self.values, axis=1)))

    def normalized(self):
        """Copy rescaled to a maximum value of 1, for display."""
        peak = np.max(self.values)
        scale = peak if peak != 0 else 1.
        return WignerGrid(self.kind, self.values / scale, self.r_max,
                          self.radii, self.radial_weights, self.angles,
                          self.x, self.y)

    def to_frame(self):
        """Long-format DataFrame with columns (r, phi, W) or (x, y, W)."""
        if self.kind == 'polar':
            r, phi = np.meshgrid(self.radii, self.angles, indexing='ij')
            return pd.DataFrame({'r': r.ravel(), 'phi': phi.ravel(),
                                 'W': self.values.ravel()},
                                columns=['r', 'phi', 'W'])
        x, y = np.meshgrid(self.x, self.y, indexing='ij')
        return pd.DataFrame({'x': x.ravel(), 'y': y.ravel(),
                             'W': self.values.ravel()},
                            columns=['x', 'y', 'W'])

    def header_lines(self):
        """Comment lines naming the grid convention and r_max."""
        if self.kind == 'polar':
            convention = 'polar alpha = r exp(i phi)'
        else:
            convention = 'cartesian alpha = x + i y'
        return ['convention: {}'.format(convention),
                'r_max: {!r}'.format(self.r_max)]

    def to_csv(self, path_or_buf):
        """Write the grid as CSV with '#' header lines.

        Parameters
        ----------
        path_or_buf : str or file-like
            Destination.

        """
        write_csv(self.to_frame(), path_or_buf, self.header_lines())

    def __repr__(self):
        return 'WignerGrid(kind={!r}, shape={}, r_max={!r})'.format(
            self.kind, self.values.shape, self.r_max)


def _reference_state(n_levels):
    """Pure state populating every level and channel equally."""
    return DensityMatrix.pure(np.ones(n_levels))


def _invert_polar(values, radii, radial_weights, angles, n_levels):
    """Density matrix from Wigner values on polar quadrature nodes."""
    d_phi = 2. * math.pi / angles.size
    entries = np.zeros((n_levels, n_levels), dtype=complex)
    for j in range(n_levels):
        # int dphi exp(i j phi) W(r, phi)
        angular = values @ np.exp(1j * j * angles) * d_phi
        kernels = displacement_radial(n_levels, j, radii)
        diagonal = 2. * kernels @ (radial_weights * radii * angular)
        index = np.arange(n_levels - j)
        entries[index + j, index] = diagonal
        if j > 0:
            entries[index, index + j] = diagonal.conj()
        else:
            entries[index, index] = diagonal.real
    return entries


def _reference_error(radii, radial_weights, angles, n_levels):
    reference = _reference_state(n_levels)
    values = _wigner_polar(reference, radii, angles)
    recovered = _invert_polar(values, radii, radial_weights, angles,
                              n_levels)
    return float(np.max(np.abs(recovered - reference.entries)))


def wigner_grid(rho, spec=None):
    """Sample the Wigner function of `rho` on a grid.

    With an automatic r_max, a polar grid starts at 2 + 3 sqrt(<n> + 1) and
    is enlarged until a reference state of the same dimension survives the
    round trip to the Wigner function and back. Polar grids get at least
    2 N + 1 angles.

    Parameters
    ----------
    rho : pyvdp.model.DensityMatrix
        Hermitian state.
    spec : GridSpec, optional
        Grid layout. Defaults to a polar grid with 200 radii and 256
        angles.

    Returns
    -------
    WignerGrid
        The sampled Wigner function.

    """
    spec = spec or GridSpec()
    r_max = spec.r_max if spec.r_max is not None else auto_r_max(rho)

    if spec.kind == 'cartesian':
        axis = np.linspace(-r_max, r_max, spec.n_points)
        x, y = np.meshgrid(axis, axis, indexing='ij')
        values = wigner_at(rho, np.abs(x + 1j * y), np.angle(x + 1j * y))
        return WignerGrid('cartesian', values, r_max, x=axis, y=axis.copy())

    n_angles = max(spec.n_angles, 2 * rho.dim + 1)
    radii, weights, angles = WignerGrid.polar_nodes(r_max, spec.n_radii,
                                                    n_angles)
    if spec.r_max is None:
        for _ in range(R_MAX_EXTENSIONS):
            if _reference_error(radii, weights, angles,
                                rho.dim) <= ROUND_TRIP_TOL:
                break
            r_max *= 1.25
            radii, weights, angles = WignerGrid.polar_nodes(
                r_max, spec.n_radii, n_angles)

    values = _wigner_polar(rho, radii, angles)
    return WignerGrid('polar', values, r_max, radii=radii,
                      radial_weights=weights, angles=angles)


def density_from_wigner(grid, n_levels, check=True):
    """Reconstruct a density matrix from a polar Wigner grid.

    Uses rho[m + j, m] = 2 int r dr dphi exp(i j phi) M_m^(j)(r) W(r, phi),
    evaluated with the grid's Gauss-Legendre radii and the trapezoidal rule
    in the angle; the upper triangle follows from Hermiticity.

    Parameters
    ----------
    grid : WignerGrid
        Polar grid.
    n_levels : int
        Dimension N of the reconstructed matrix.
    check : bool
        Whether to validate the quadrature with a reference state first.

    Returns
    -------
    pyvdp.model.DensityMatrix
        The reconstructed matrix.

    Raises
    ------
    pyvdp.util.errors.InvalidGridError
        If the grid is not polar.
    pyvdp.util.errors.QuadratureUnderResolved
        If the grid cannot resolve N levels: too few angles or a reference
        round-trip error above 1e-6.

    """
    grid._require_polar('Reconstructing a density matrix')
    if check:
        if grid.angles.size < 2 * n_levels + 1:
            raise QuadratureUnderResolved(
                "{} angles cannot resolve {} levels, at least {} are "
                "needed.".format(grid.angles.size, n_levels,
                                 2 * n_levels + 1))
        error = _reference_error(grid.radii, grid.radial_weights,
                                 grid.angles, n_levels)
        if error > ROUND_TRIP_TOL:
            raise QuadratureUnderResolved(
                "Reference round-trip error {:.3g} exceeds {:g}; enlarge "
                "r_max or the number of radii.".format(error, ROUND_TRIP_TOL))

    entries = _invert_polar(grid.values, grid.radii, grid.radial_weights,
                            grid.angles, n_levels)
    return DensityMatrix(entries)
