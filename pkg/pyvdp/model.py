# -*- coding: utf-8 -*-
"""Module defining the model parameters of the driven quantum van der Pol
oscillator and the construction of its Lindblad generator in a truncated
Fock basis.

Density matrices are vectorized by stacking their columns, so that the
element rho[n, m] lives at index ``n + N * m`` and
``vec(A X B) = (B^T kron A) vec(X)``.
"""
import math
import warnings

import numpy as np
from scipy import sparse
from scipy.special import gammaln
from scipy.sparse.linalg import norm as sparse_norm

from pyvdp.util.errors import (
    CapacityError,
    DimensionMismatchError,
    InvalidParameterError,
    TruncationWarning,
)


# SuperLU addresses the factorized matrix with 32-bit indices.
MAX_LIOUVILLIAN_DIM = np.iinfo(np.int32).max // 16


def _check_rate(name, value, strict=False, allow_negative=False):
    """Validate a single rate value.

    Parameters
    ----------
    name : str
        Name of the field, used in the error message.
    value : float
        Value to check.
    strict : bool
        Whether the value should be strictly positive.
    allow_negative : bool
        Whether negative values are accepted (drive phase of pi).

    Returns
    -------
    float
        The value, converted to float.

    Raises
    ------
    pyvdp.util.errors.InvalidParameterError
        If the value is not a finite real number in the allowed range.

    """
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise InvalidParameterError(
            "Field '{}' should be a real number, got {!r}.".format(
                name, value))
    if not math.isfinite(value):
        raise InvalidParameterError(
            "Field '{}' should be finite, got {}.".format(name, value))
    if strict and value <= 0:
        raise InvalidParameterError(
            "Field '{}' should be strictly positive, got {}.".format(
                name, value))
    if not allow_negative and value < 0:
        raise InvalidParameterError(
            "Field '{}' should be non-negative, got {}.".format(name, value))
    return value


class VdpParams(object):
    """Physical rates of the driven quantum van der Pol oscillator.

    All rates are expressed in units of a common reference rate, usually
    the two-particle loss rate gamma2.

    The drive amplitude is real. A negative value encodes a drive with phase
    pi, which is what the drive-antisymmetry of the response and central
    differences around zero drive require.
    """

    __slots__ = ('_gamma1_plus', '_gamma1_minus', '_gamma2', '_omega_drive')

    def __init__(self, gamma1_plus=0.0, gamma1_minus=0.0, gamma2=1.0,
                 omega_drive=0.0):
        """Initialisation.

        Parameters
        ----------
        gamma1_plus : float
            One-particle gain rate, >= 0.
        gamma1_minus : float
            One-particle loss rate, >= 0.
        gamma2 : float
            Two-particle loss rate, > 0.
        omega_drive : float
            Resonant drive amplitude.

        Raises
        ------
        pyvdp.util.errors.InvalidParameterError
            If any of the rates is outside its allowed range.

        """
        self._gamma1_plus = _check_rate('gamma1_plus', gamma1_plus)
        self._gamma1_minus = _check_rate('gamma1_minus', gamma1_minus)
        self._gamma2 = _check_rate('gamma2', gamma2, strict=True)
        self._omega_drive = _check_rate('omega_drive', omega_drive,
                                        allow_negative=True)

    @property
    def gamma1_plus(self):
        return self._gamma1_plus

    @property
    def gamma1_minus(self):
        return self._gamma1_minus

    @property
    def gamma2(self):
        return self._gamma2

    @property
    def omega_drive(self):
        return self._omega_drive

    @property
    def gamma1(self):
        """Net linear gain (gamma1_plus - gamma1_minus) / 2."""
        return (self._gamma1_plus - self._gamma1_minus) / 2.

    @property
    def Gamma1(self):
        """Mean linear rate (gamma1_plus + gamma1_minus) / 2."""
        return (self._gamma1_plus + self._gamma1_minus) / 2.

    def scaled(self, factor):
        """Return a copy with all four rates multiplied by `factor`.

        Parameters
        ----------
        factor : float
            Strictly positive scale factor.

        Returns
        -------
        VdpParams
            The rescaled parameters.

        """
        factor = _check_rate('factor', factor, strict=True)
        return VdpParams(self._gamma1_plus * factor,
                         self._gamma1_minus * factor,
                         self._gamma2 * factor,
                         self._omega_drive * factor)

    def in_units_of_gamma2(self):
        """Return a copy rescaled so that gamma2 equals 1."""
        return self.scaled(1. / self._gamma2)

    def with_drive(self, omega_drive):
        """Return a copy with a different drive amplitude."""
        return VdpParams(self._gamma1_plus, self._gamma1_minus,
                         self._gamma2, omega_drive)

    def replace(self, **kwargs):
        """Return a copy with the given fields replaced.

        Besides the four stored fields, the derived ``gamma1`` and
        ``Gamma1`` can be given; they are converted back to gain and loss
        keeping the other derived rate fixed.

        Returns
        -------
        VdpParams
            The updated parameters.

        Raises
        ------
        pyvdp.util.errors.InvalidParameterError
            If an unknown field is given or the result is invalid.

        """
        values = self.as_dict()
        gamma1 = kwargs.pop('gamma1', None)
        Gamma1 = kwargs.pop('Gamma1', None)
        for key in kwargs:
            if key not in values:
                raise InvalidParameterError(
                    "Unknown parameter field '{}'.".format(key))
        values.update(kwargs)

        if gamma1 is not None or Gamma1 is not None:
            g = self.gamma1 if gamma1 is None else float(gamma1)
            G = self.Gamma1 if Gamma1 is None else float(Gamma1)
            values['gamma1_plus'] = G + g
            values['gamma1_minus'] = G - g

        return VdpParams(**values)

    def as_dict(self):
        """Return the four rates as a dictionary."""
        return {'gamma1_plus': self._gamma1_plus,
                'gamma1_minus': self._gamma1_minus,
                'gamma2': self._gamma2,
                'omega_drive': self._omega_drive}

    def __eq__(self, other):
        if not isinstance(other, VdpParams):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.as_dict().items())))

    def __repr__(self):
        return ('VdpParams(gamma1_plus={!r}, gamma1_minus={!r}, '
                'gamma2={!r}, omega_drive={!r})').format(
            self._gamma1_plus, self._gamma1_minus, self._gamma2,
            self._omega_drive)


class Truncation(object):
    """Fock space truncation policy."""

    __slots__ = ('_n_levels', '_tail_tol', '_n_max')

    def __init__(self, n_levels, tail_tol=1e-6, n_max=200):
        """Initialisation.

        Parameters
        ----------
        n_levels : int
            Number of Fock levels N (states 0 .. N-1), at least 3.
        tail_tol : float
            Maximum allowed occupation of the top two levels, in (0, 1).
        n_max : int
            Upper bound for adaptive growth of `n_levels`.

        Raises
        ------
        pyvdp.util.errors.InvalidParameterError
            If the policy is inconsistent.

        """
        if int(n_levels) != n_levels or n_levels < 3:
            raise InvalidParameterError(
                "Field 'n_levels' should be an integer >= 3, got {!r}.".format(
                    n_levels))
        if not 0 < tail_tol < 1:
            raise InvalidParameterError(
                "Field 'tail_tol' should be in (0, 1), got {!r}.".format(
                    tail_tol))
        if int(n_max) != n_max or n_max < n_levels:
            raise InvalidParameterError(
                "Field 'n_max' should be an integer >= n_levels ({}), "
                "got {!r}.".format(n_levels, n_max))

        self._n_levels = int(n_levels)
        self._tail_tol = float(tail_tol)
        self._n_max = int(n_max)

    @property
    def n_levels(self):
        return self._n_levels

    @property
    def tail_tol(self):
        return self._tail_tol

    @property
    def n_max(self):
        return self._n_max

    def with_levels(self, n_levels):
        """Return a copy with a different number of levels.

        The cap `n_max` is raised when needed.
        """
        return Truncation(n_levels, self._tail_tol,
                          max(self._n_max, n_levels))

    def grown(self):
        """Return the next truncation in the adaptive growth sequence.

        Returns
        -------
        Truncation or None
            Truncation with N + ceil(N / 4) levels, capped at `n_max`, or
            None when the cap has already been reached.

        """
        if self._n_levels >= self._n_max:
            return None
        new_n = min(self._n_levels + int(math.ceil(self._n_levels / 4.)),
                    self._n_max)
        return Truncation(new_n, self._tail_tol, self._n_max)

    def __eq__(self, other):
        if not isinstance(other, Truncation):
            return NotImplemented
        return (self._n_levels, self._tail_tol, self._n_max) == \
            (other._n_levels, other._tail_tol, other._n_max)

    def __repr__(self):
        return 'Truncation(n_levels={!r}, tail_tol={!r}, n_max={!r})'.format(
            self._n_levels, self._tail_tol, self._n_max)


class DensityMatrix(object):
    """Density matrix in a truncated Fock basis."""

    def __init__(self, entries):
        """Initialisation.

        Parameters
        ----------
        entries : array_like
            Square N x N array with elements rho[n, m] = <n|rho|m>.

        Raises
        ------
        pyvdp.util.errors.DimensionMismatchError
            If `entries` is not a square matrix.

        """
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatchError(
                "A density matrix should be square, got shape {}.".format(
                    entries.shape))
        self.entries = entries

    @property
    def dim(self):
        return self.entries.shape[0]

    @classmethod
    def vacuum(cls, n_levels):
        """The vacuum state |0><0|."""
        return cls.fock(n_levels, 0)

    @classmethod
    def fock(cls, n_levels, n):
        """The number state |n><n|.

        Parameters
        ----------
        n_levels : int
            Dimension of the truncated space.
        n : int
            Occupied level, 0 <= n < n_levels.

        Returns
        -------
        DensityMatrix
            The number state.

        """
        if not 0 <= n < n_levels:
            raise DimensionMismatchError(
                "Level {} does not exist in a space of dimension {}.".format(
                    n, n_levels))
        entries = np.zeros((n_levels, n_levels), dtype=complex)
        entries[n, n] = 1.
        return cls(entries)

    @classmethod
    def pure(cls, amplitudes):
        """The pure state built from (unnormalized) Fock amplitudes.

        Parameters
        ----------
        amplitudes : array_like
            Amplitudes c_n of the state sum_n c_n |n>.

        Returns
        -------
        DensityMatrix
            The normalized projector onto the state.

        """
        psi = np.asarray(amplitudes, dtype=complex)
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()))

    @classmethod
    def coherent(cls, alpha, n_levels):
        """Truncated and renormalized coherent state |alpha><alpha|."""
        n = np.arange(n_levels)
        alpha = complex(alpha)
        if alpha == 0:
            return cls.vacuum(n_levels)
        log_abs = n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1)
        amplitudes = np.exp(log_abs - 0.5 * abs(alpha) ** 2) * \
            np.exp(1j * n * np.angle(alpha))
        return cls.pure(amplitudes)

    @classmethod
    def from_vector(cls, vector, n_levels=None):
        """Build a density matrix from its column-stacked vectorization.

        Parameters
        ----------
        vector : array_like
            Vector of length N**2.
        n_levels : int, optional
            Dimension N. Derived from the vector length when omitted.

        Returns
        -------
        DensityMatrix
            The density matrix.

        Raises
        ------
        pyvdp.util.errors.DimensionMismatchError
            If the vector length is not N**2.

        """
        vector = np.asarray(vector)
        if n_levels is None:
            n_levels = int(round(math.sqrt(vector.size)))
        if vector.size != n_levels ** 2:
            raise DimensionMismatchError(
                "Vector of length {} does not match dimension {}.".format(
                    vector.size, n_levels))
        return cls(vector.reshape((n_levels, n_levels), order='F'))

    @classmethod
    def random_physical(cls, n_levels, seed=None, rank=None,
                        decay_length=None):
        """Draw a random physical density matrix.

        Parameters
        ----------
        n_levels : int
            Dimension of the truncated space.
        seed : int, optional
            Seed for numpy's random generator.
        rank : int, optional
            Rank of the state. Defaults to full rank.
        decay_length : float, optional
            When given, the amplitude of level n is damped by
            exp(-n / decay_length), producing a low-occupation state.

        Returns
        -------
        DensityMatrix
            Hermitian, positive semidefinite matrix with unit trace.

        """
        rng = np.random.default_rng(seed)
        rank = n_levels if rank is None else rank
        g = rng.standard_normal((n_levels, rank)) + \
            1j * rng.standard_normal((n_levels, rank))
        if decay_length is not None:
            g *= np.exp(-np.arange(n_levels) / decay_length)[:, None]
        entries = g @ g.conj().T
        return cls(entries / np.trace(entries).real)

    def to_vector(self):
        """Column-stacked vectorization of the matrix."""
        return self.entries.reshape(-1, order='F')

    def padded(self, n_levels):
        """Return the same state embedded in a larger space.

        Parameters
        ----------
        n_levels : int
            New dimension, >= the current one.

        Returns
        -------
        DensityMatrix
            Copy with zeros in the added rows and columns.

        """
        if n_levels < self.dim:
            raise DimensionMismatchError(
                "Cannot pad a matrix of dimension {} to {}.".format(
                    self.dim, n_levels))
        entries = np.zeros((n_levels, n_levels), dtype=complex)
        entries[:self.dim, :self.dim] = self.entries
        return DensityMatrix(entries)

    def trace(self):
        return np.trace(self.entries)

    def populations(self):
        """Real diagonal p_n = rho[n, n]."""
        return np.diagonal(self.entries).real.copy()

    def expect(self, operator):
        """Expectation value Tr(operator rho).

        Parameters
        ----------
        operator : array_like or scipy.sparse matrix
            Operator of dimension N x N.

        Returns
        -------
        complex
            The expectation value.

        """
        if operator.shape != self.entries.shape:
            raise DimensionMismatchError(
                "Operator of shape {} does not act on dimension {}.".format(
                    operator.shape, self.dim))
        if sparse.issparse(operator):
            return complex(operator.multiply(self.entries.T).sum())
        return complex(np.sum(np.asarray(operator) * self.entries.T))

    def is_hermitian(self, rtol=1e-12):
        scale = np.max(np.abs(self.entries))
        if scale == 0:
            return True
        return bool(np.max(np.abs(self.entries - self.entries.conj().T))
                    <= rtol * scale)

    def is_normalized(self, tol=1e-12):
        return abs(self.trace() - 1) <= tol

    def is_physical(self, tol=1e-10):
        """Whether the matrix is Hermitian with eigenvalues >= -tol."""
        if not self.is_hermitian():
            return False
        hermitian = (self.entries + self.entries.conj().T) / 2.
        return bool(np.min(np.linalg.eigvalsh(hermitian)) >= -tol)

    def hermitian_part(self):
        return DensityMatrix((self.entries + self.entries.conj().T) / 2.)

    def __repr__(self):
        return 'DensityMatrix(dim={})'.format(self.dim)


def ladder_operators(n_levels):
    """Truncated annihilation and creation operators.

    Parameters
    ----------
    n_levels : int
        Number of Fock levels N.

    Returns
    -------
    a, a_dag : scipy.sparse.csr_matrix
        Sparse N x N matrices with a|n> = sqrt(n)|n-1>.

    """
    if n_levels < 1:
        raise DimensionMismatchError(
            "Number of levels should be positive, got {}.".format(n_levels))
    a = sparse.diags(np.sqrt(np.arange(1, n_levels, dtype=float)), 1,
                     shape=(n_levels, n_levels), format='csr')
    return a, a.T.tocsr()


def _dissipator(c, identity):
    """Superoperator of D[c] rho = c rho c^+ - {c^+ c, rho} / 2."""
    c_dag_c = c.conj().T @ c
    return (sparse.kron(c.conj(), c)
            - 0.5 * sparse.kron(identity, c_dag_c)
            - 0.5 * sparse.kron(c_dag_c.T, identity))


class Liouvillian(object):
    """Sparse generator acting on column-stacked density matrices."""

    def __init__(self, params, n_levels, matrix):
        self.params = params
        self.n_levels = n_levels
        self.matrix = matrix

    @property
    def dim(self):
        return self.matrix.shape[0]

    def norm(self):
        """Infinity norm of the generator."""
        return float(sparse_norm(self.matrix, np.inf))

    def index(self, n, m):
        """Position of the element rho[n, m] in the vectorization."""
        return n + self.n_levels * m

    def apply(self, rho):
        """Time derivative of `rho` as a DensityMatrix."""
        if rho.dim != self.n_levels:
            raise DimensionMismatchError(
                "Density matrix of dimension {} does not match a "
                "Liouvillian of dimension {}.".format(rho.dim, self.n_levels))
        return DensityMatrix.from_vector(self.matrix @ rho.to_vector(),
                                         self.n_levels)

    def __repr__(self):
        return 'Liouvillian(n_levels={}, nnz={})'.format(
            self.n_levels, self.matrix.nnz)


def build_liouvillian(params, n_levels):
    """Build the sparse Lindblad generator in a truncated Fock basis.

    The generator is assembled from truncated ladder operators with
    Hamiltonian H = i Omega (a^+ - a) and jump operators a^+, a and a^2
    with rates gamma1_plus, gamma1_minus and gamma2. Transitions out of the
    kept levels are absent, which keeps the truncated generator exactly
    trace and Hermiticity preserving.

    Parameters
    ----------
    params : VdpParams
        Model rates.
    n_levels : int
        Number of Fock levels N, at least 3.

    Returns
    -------
    Liouvillian
        Generator with an N**2 x N**2 CSR matrix in canonical form.

    Raises
    ------
    pyvdp.util.errors.DimensionMismatchError
        If `n_levels` is smaller than 3.
    pyvdp.util.errors.CapacityError
        If N**2 exceeds the supported superoperator dimension.

    """
    if n_levels < 3:
        raise DimensionMismatchError(
            "At least 3 levels are required, got {}.".format(n_levels))
    if n_levels ** 2 > MAX_LIOUVILLIAN_DIM:
        raise CapacityError(
            "A truncation of {} levels gives a superoperator of dimension "
            "{}, exceeding the supported maximum of {}.".format(
                n_levels, n_levels ** 2, MAX_LIOUVILLIAN_DIM))

    a, a_dag = ladder_operators(n_levels)
    identity = sparse.identity(n_levels, format='csr')
    k = a_dag - a

    # -i[H, rho] with H = i Omega (a^+ - a) is Omega (K rho - rho K)
    generator = params.omega_drive * (sparse.kron(identity, k)
                                      - sparse.kron(k.T, identity))
    for rate, jump in ((params.gamma1_plus, a_dag),
                       (params.gamma1_minus, a),
                       (params.gamma2, a @ a)):
        if rate != 0:
            generator = generator + rate * _dissipator(jump, identity)

    matrix = sparse.csr_matrix(generator, dtype=complex)
    matrix.sum_duplicates()
    matrix.eliminate_zeros()
    matrix.sort_indices()
    return Liouvillian(params, n_levels, matrix)


def apply_liouvillian(params, rho):
    """Matrix-free evaluation of the time derivative of `rho`.

    Parameters
    ----------
    params : VdpParams
        Model rates.
    rho : DensityMatrix
        State with dimension at least 3.

    Returns
    -------
    DensityMatrix
        The time derivative, with the same truncation as
        `build_liouvillian`.

    Raises
    ------
    pyvdp.util.errors.DimensionMismatchError
        If `rho` has fewer than 3 levels.

    """
    if rho.dim < 3:
        raise DimensionMismatchError(
            "At least 3 levels are required, got {}.".format(rho.dim))

    a, a_dag = (op.toarray() for op in ladder_operators(rho.dim))
    x = rho.entries
    k = a_dag - a

    def dissipate(c):
        c_dag = c.conj().T
        c_dag_c = c_dag @ c
        return c @ x @ c_dag - 0.5 * (c_dag_c @ x + x @ c_dag_c)

    rho_dot = params.omega_drive * (k @ x - x @ k)
    if params.gamma1_plus != 0:
        rho_dot = rho_dot + params.gamma1_plus * dissipate(a_dag)
    if params.gamma1_minus != 0:
        rho_dot = rho_dot + params.gamma1_minus * dissipate(a)
    if params.gamma2 != 0:
        rho_dot = rho_dot + params.gamma2 * dissipate(a @ a)
    return DensityMatrix(rho_dot)


def mode_equation_residual(params, rho, tail_tol=1e-6):
    """Compare two evaluations of the time derivative of <a>.

    The first evaluation takes Tr(a L(rho)); the second one evaluates the
    closed mode equation

        d<a>/dt = gamma1 <a> - gamma2 <a^+ a a> + Omega

    with gamma1 = (gamma1_plus - gamma1_minus) / 2.

    Parameters
    ----------
    params : VdpParams
        Model rates.
    rho : DensityMatrix
        Normalized state.
    tail_tol : float
        Top-level occupation above which a TruncationWarning is emitted.

    Returns
    -------
    complex
        Difference between the generator value and the mode equation.

    """
    a, a_dag = ladder_operators(rho.dim)
    top = float(rho.entries[-1, -1].real)
    if top > tail_tol:
        warnings.warn(
            "Occupation {:.3g} of the top level exceeds {:.3g}; the mode "
            "equation does not hold under this truncation.".format(
                top, tail_tol), TruncationWarning)

    from_generator = apply_liouvillian(params, rho).expect(a)
    from_mode_equation = (params.gamma1 * rho.expect(a)
                          - params.gamma2 * rho.expect(a_dag @ a @ a)
                          + params.omega_drive)
    return from_generator - from_mode_equation
