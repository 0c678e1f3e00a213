# -*- coding: utf-8 -*-
"""Module computing steady states of the driven van der Pol Liouvillian.

The steady state is found by replacing the (redundant) equation of the top
population with the trace condition and solving the resulting sparse linear
system. Because the generator is real and commutes with transposition, the
steady state is real and symmetric; the default solver works on that
subspace only. A fixed-step Runge-Kutta integrator provides an independent
cross-check.
"""
import math
import warnings

import numpy as np
from scipy import sparse
from scipy.linalg import svdvals
from scipy.sparse.linalg import (
    LinearOperator,
    MatrixRankWarning,
    spsolve,
    splu,
    svds,
)

from pyvdp.analytic import ClassicalParams, classical_response
from pyvdp.model import DensityMatrix, Truncation, build_liouvillian
from pyvdp.util.errors import (
    DegenerateSteadyState,
    DimensionMismatchError,
    InvalidParameterError,
    LimitCycleAmplitudeWarning,
    NotConverged,
    SolverSingular,
    StepUnstable,
    TruncationExceeded,
)
from pyvdp.util.hooks import HookRunner

#: Singular values below this fraction of the generator norm are zero modes.
DEGENERACY_TOL = 1e-10

#: Systems with at most this many rows are inspected with a dense SVD.
DENSE_SVD_LIMIT = 1600

#: Number of smallest singular values computed on large systems.
SPARSE_SVD_MODES = 4

#: Maximum trace drift tolerated by the time integrator.
TRACE_DRIFT_TOL = 1e-6


class SteadyStateResult(object):
    """Steady state together with its solver diagnostics."""

    def __init__(self, params, rho, residual, tail_mass, nullspace_dim,
                 method):
        """Initialisation.

        Parameters
        ----------
        params : pyvdp.model.VdpParams
            Parameters of the solved model.
        rho : pyvdp.model.DensityMatrix
            The steady state.
        residual : float
            Infinity norm of the generator applied to the state.
        tail_mass : float
            Occupation of the top two levels.
        nullspace_dim : int or None
            Detected dimension of the steady manifold, None when it was not
            determined (time evolution).
        method : str
            Name of the solver that produced the state: 'real', 'complex'
            or 'evolve'.

        """
        self.params = params
        self.rho = rho
        self.residual = residual
        self.tail_mass = tail_mass
        self.nullspace_dim = nullspace_dim
        self.method = method

    @property
    def n_levels(self):
        return self.rho.dim

    def __repr__(self):
        return ('SteadyStateResult(n_levels={}, residual={:.3g}, '
                'tail_mass={:.3g}, method={!r})').format(
            self.n_levels, self.residual, self.tail_mass, self.method)


def tail_mass(rho):
    """Occupation of the top two levels of `rho`."""
    p = rho.populations()
    return float(p[-1] + p[-2])


def initial_truncation(params, tail_tol=1e-6, n_max=200):
    """Estimate a starting truncation from the expected number statistics.

    In the limit-cycle phase the number distribution is close to a Gaussian
    with mean (gamma1_plus - gamma1_minus) / (2 gamma2) and standard
    deviation sqrt((3 gamma1_plus - gamma1_minus) / (4 gamma2)); five
    standard deviations above the mean are kept. Otherwise four critical
    widths sqrt(Gamma1 / gamma2) are kept, reduced to the thermal occupation
    deep in the damped phase. The classical driven amplitude adds room for a
    displaced state.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.
    tail_tol : float
        Tail tolerance of the returned truncation.
    n_max : int
        Cap of the returned truncation.

    Returns
    -------
    pyvdp.model.Truncation
        Truncation with at least 15 levels and at most `n_max`.

    """
    gp, gm, g2 = params.gamma1_plus, params.gamma1_minus, params.gamma2
    if gp > gm:
        mean = (gp - gm) / (2. * g2)
        std = math.sqrt((3. * gp - gm) / (4. * g2))
        base = mean + 5. * std
    else:
        width = math.sqrt(params.Gamma1 / g2)
        if gm > gp:
            width = min(width, 1. + 2. * gp / (gm - gp))
        base = 4. * width

    with warnings.catch_warnings():
        warnings.simplefilter('ignore', LimitCycleAmplitudeWarning)
        alpha = classical_response(ClassicalParams(
            params.gamma1, g2, abs(params.omega_drive)))
    displaced = alpha ** 2 + 6. * alpha + 5.

    n_levels = max(15, int(math.ceil(max(base, displaced))))
    n_levels = min(n_levels, n_max)
    return Truncation(n_levels, tail_tol, max(n_max, n_levels))


def _trace_row(n_levels):
    """Sparse row vector with ones at the diagonal positions of vec(rho)."""
    diagonal = np.arange(n_levels) * (n_levels + 1)
    return sparse.csr_matrix(
        (np.ones(n_levels), (np.zeros(n_levels, dtype=int), diagonal)),
        shape=(1, n_levels ** 2))


def _replace_row(matrix, row_index, row):
    """Return CSR `matrix` with row `row_index` replaced by `row`."""
    matrix = sparse.csr_matrix(matrix)
    return sparse.vstack([matrix[:row_index], row, matrix[row_index + 1:]],
                         format='csc')


def constrained_system(liouvillian):
    """Square system whose unique solution is the normalized steady state.

    The equation of the top population rho[N-1, N-1] equals minus the sum
    of the other population equations, so it is replaced by Tr rho = 1.

    Parameters
    ----------
    liouvillian : pyvdp.model.Liouvillian
        The generator.

    Returns
    -------
    matrix : scipy.sparse.csc_matrix
        Complex N**2 x N**2 matrix.
    rhs : numpy.ndarray
        Right-hand side, a unit vector at the replaced row.

    """
    n = liouvillian.n_levels
    row = liouvillian.index(n - 1, n - 1)
    matrix = _replace_row(liouvillian.matrix, row,
                          _trace_row(n).astype(complex))
    rhs = np.zeros(n ** 2, dtype=complex)
    rhs[row] = 1.
    return matrix, rhs


def _symmetric_packing(n_levels):
    """Maps between vec(rho) and the packed lower triangle of a symmetric rho.

    Returns
    -------
    unpack : scipy.sparse.csr_matrix
        N**2 x M matrix mapping packed values to vec(rho).
    select : scipy.sparse.csr_matrix
        M x N**2 matrix selecting the equations of the lower triangle.
    pairs : list of tuple
        Packed (n, m) pairs with n >= m, in packed order.

    """
    pairs = [(n, m) for m in range(n_levels) for n in range(m, n_levels)]
    size = len(pairs)
    rows, cols = [], []
    select_cols = []
    for k, (n, m) in enumerate(pairs):
        rows.append(n + n_levels * m)
        cols.append(k)
        if n != m:
            rows.append(m + n_levels * n)
            cols.append(k)
        select_cols.append(n + n_levels * m)

    unpack = sparse.csr_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(n_levels ** 2, size))
    select = sparse.csr_matrix(
        (np.ones(size), (np.arange(size), select_cols)),
        shape=(size, n_levels ** 2))
    return unpack, select, pairs


def symmetric_system(liouvillian):
    """Real trace-constrained system on the symmetric subspace.

    The generator is real and commutes with transposition, so it maps real
    symmetric matrices onto real symmetric matrices. Only the equations and
    unknowns of the lower triangle are kept.

    Parameters
    ----------
    liouvillian : pyvdp.model.Liouvillian
        The generator.

    Returns
    -------
    matrix : scipy.sparse.csc_matrix
        Real M x M matrix with M = N (N + 1) / 2.
    rhs : numpy.ndarray
        Right-hand side, a unit vector at the trace row.
    unpack : scipy.sparse.csr_matrix
        Map from packed unknowns to vec(rho).

    """
    n = liouvillian.n_levels
    unpack, select, pairs = _symmetric_packing(n)
    reduced = (select @ liouvillian.matrix.real @ unpack).tocsr()

    trace_row = sparse.csr_matrix(
        (np.ones(n), (np.zeros(n, dtype=int),
                      [k for k, (i, j) in enumerate(pairs) if i == j])),
        shape=(1, len(pairs)))
    row = pairs.index((n - 1, n - 1))
    matrix = _replace_row(reduced, row, trace_row)
    rhs = np.zeros(len(pairs))
    rhs[row] = 1.
    return matrix, rhs, unpack


def _count_from_lu(lu, shape, dtype, threshold):
    """Count singular values below `threshold` of the matrix factorized in
    `lu`, from the largest singular values of its inverse.

    The number of computed modes is doubled while all of them are small.
    """
    size = shape[0]
    inverse = LinearOperator(
        shape, dtype=dtype,
        matvec=lambda x: lu.solve(np.asarray(x, dtype=dtype)),
        rmatvec=lambda x: lu.solve(np.asarray(x, dtype=dtype), trans='H'))
    k = min(SPARSE_SVD_MODES, size - 2)
    while True:
        s_inverse = svds(inverse, k=k, return_singular_vectors=False,
                         random_state=0)
        with np.errstate(divide='ignore'):
            s = 1. / np.abs(s_inverse)
        count = int(np.sum(s < threshold))
        if count < k or k == size - 2:
            return count
        k = min(2 * k, size - 2)


def _count_small_singular_values(matrix, threshold, lu=None):
    """Count singular values of `matrix` below `threshold`.

    Small systems use a dense SVD. Larger ones look at the largest singular
    values of the inverse, using an existing LU factorization when given.
    An exactly singular matrix is factorized with a diagonal shift equal to
    `threshold`: singular values move by at most the shift, so the zero
    modes are those of the shifted matrix below twice the threshold.
    """
    size = matrix.shape[0]
    if size <= DENSE_SVD_LIMIT:
        s = svdvals(matrix.toarray())
        return int(np.sum(s < threshold))

    dtype = np.result_type(matrix.dtype, float)
    if lu is not None:
        return _count_from_lu(lu, matrix.shape, dtype, threshold)
    try:
        lu = splu(sparse.csc_matrix(matrix))
    except RuntimeError:
        pass
    else:
        return _count_from_lu(lu, matrix.shape, dtype, threshold)

    shifted = matrix + threshold * sparse.identity(size, dtype=matrix.dtype)
    try:
        lu = splu(sparse.csc_matrix(shifted))
    except RuntimeError:
        raise SolverSingular(
            "The shifted constrained system could not be factorized.")
    return _count_from_lu(lu, matrix.shape, dtype, 2. * threshold)


def nullspace_dimension(liouvillian, tol=DEGENERACY_TOL):
    """Dimension of the steady manifold of a generator.

    Parameters
    ----------
    liouvillian : pyvdp.model.Liouvillian
        The generator.
    tol : float
        Singular values below ``tol`` times the generator norm count as
        zero modes.

    Returns
    -------
    int
        Number of linearly independent steady states, i.e. one more than
        the nullity of the trace-constrained system.

    """
    matrix, _ = constrained_system(liouvillian)
    threshold = tol * max(liouvillian.norm(), 1.)
    return _count_small_singular_values(matrix, threshold) + 1


def _solve_real(liouvillian, tol):
    """Solve on the symmetric subspace and return (rho, nullity)."""
    matrix, rhs, unpack = symmetric_system(liouvillian)
    threshold = tol * max(liouvillian.norm(), 1.)
    try:
        lu = splu(matrix)
    except RuntimeError:
        raise DegenerateSteadyState(
            "The trace-constrained system is exactly singular: the steady "
            "state is not unique.",
            nullspace_dim=_safe_nullspace_dimension(liouvillian, tol))

    nullity = _count_small_singular_values(matrix, threshold, lu=lu)
    if nullity > 0:
        raise DegenerateSteadyState(
            "The steady state is not unique for {!r}.".format(
                liouvillian.params),
            nullspace_dim=_safe_nullspace_dimension(liouvillian, tol))

    x = lu.solve(rhs)
    # one step of iterative refinement
    x = x + lu.solve(rhs - matrix @ x)
    rho = DensityMatrix.from_vector(unpack @ x, liouvillian.n_levels)
    return rho, nullity


def _solve_complex(liouvillian, tol):
    """Solve the full complex system and return (rho, nullity)."""
    matrix, rhs = constrained_system(liouvillian)
    threshold = tol * max(liouvillian.norm(), 1.)
    nullity = _count_small_singular_values(matrix, threshold)
    if nullity > 0:
        raise DegenerateSteadyState(
            "The steady state is not unique for {!r}.".format(
                liouvillian.params),
            nullspace_dim=nullity + 1)

    with warnings.catch_warnings():
        warnings.simplefilter('error', MatrixRankWarning)
        try:
            x = spsolve(matrix, rhs)
        except MatrixRankWarning:
            raise SolverSingular(
                "The trace-constrained system is numerically singular.")
    rho = DensityMatrix.from_vector(x, liouvillian.n_levels)
    return rho.hermitian_part(), nullity


def _safe_nullspace_dimension(liouvillian, tol):
    try:
        return nullspace_dimension(liouvillian, tol)
    except Exception:
        return None


def _solve_fixed(params, n_levels, tol, method, degeneracy_tol):
    """Solve at a fixed truncation and return (rho, residual, nullity)."""
    liouvillian = build_liouvillian(params, n_levels)
    if method == 'real':
        rho, nullity = _solve_real(liouvillian, degeneracy_tol)
    else:
        rho, nullity = _solve_complex(liouvillian, degeneracy_tol)

    if not np.all(np.isfinite(rho.entries)):
        raise SolverSingular(
            "The steady-state solve produced non-finite values.")

    rho = DensityMatrix(rho.entries / rho.trace().real)
    residual = float(np.max(np.abs(liouvillian.matrix @ rho.to_vector())))
    if residual > tol:
        raise SolverSingular(
            "Residual {:.3g} of the steady state exceeds the tolerance "
            "{:.3g}; the constrained system is numerically singular.".format(
                residual, tol))
    return rho, residual, nullity


def solve_steady(params, trunc=None, tol=1e-10, method='real',
                 degeneracy_tol=DEGENERACY_TOL):
    """Compute the unique normalized steady state.

    The truncation is grown by ceil(N / 4) levels at a time until the
    occupation of the top two levels is below ``trunc.tail_tol``.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.
    trunc : pyvdp.model.Truncation, optional
        Starting truncation policy. Defaults to `initial_truncation`.
    tol : float
        Accepted infinity norm of L vec(rho).
    method : str
        'real' (default) solves in real arithmetic on the symmetric
        subspace; 'complex' solves the full complex system.
    degeneracy_tol : float
        Relative threshold for zero modes of the constrained system.

    Returns
    -------
    SteadyStateResult
        The steady state and its diagnostics.

    Raises
    ------
    pyvdp.util.errors.DegenerateSteadyState
        If the steady manifold has more than one dimension.
    pyvdp.util.errors.TruncationExceeded
        If the tail is still too heavy at ``trunc.n_max`` levels.
    pyvdp.util.errors.SolverSingular
        If the constrained system is numerically singular.

    """
    if method not in ('real', 'complex'):
        raise InvalidParameterError(
            "Unknown steady-state method '{}', use 'real' or "
            "'complex'.".format(method))
    if trunc is None:
        trunc = initial_truncation(params)

    while True:
        rho, residual, nullity = _solve_fixed(
            params, trunc.n_levels, tol, method, degeneracy_tol)
        tail = tail_mass(rho)
        if tail <= trunc.tail_tol:
            break

        grown = trunc.grown()
        if grown is None:
            raise TruncationExceeded(
                "Occupation {:.3g} of the top two levels exceeds {:.3g} at "
                "the maximum truncation of {} levels.".format(
                    tail, trunc.tail_tol, trunc.n_levels),
                n_levels=trunc.n_levels, tail_mass=tail)
        HookRunner.execute_truncation_grown(params, trunc.n_levels,
                                            grown.n_levels, tail)
        trunc = grown

    HookRunner.execute_steady_solved(params, trunc.n_levels, residual)
    return SteadyStateResult(params, rho, residual, tail, nullity + 1,
                             method)


def steady_state_complex(params, trunc=None, tol=1e-10):
    """Reference solver on the full complex system.

    See `solve_steady` for parameters and errors.
    """
    return solve_steady(params, trunc, tol, method='complex')


def _rk4_step(matrix, x, dt):
    k1 = matrix @ x
    k2 = matrix @ (x + 0.5 * dt * k1)
    k3 = matrix @ (x + 0.5 * dt * k2)
    k4 = matrix @ (x + dt * k3)
    return x + dt / 6. * (k1 + 2. * k2 + 2. * k3 + k4), k1


def default_time_step(liouvillian):
    """Conservative Runge-Kutta step 0.1 / ||L||."""
    return 0.1 / max(liouvillian.norm(), 1e-300)


def integrate(params, rho0, t_end, dt=None):
    """Propagate `rho0` over a time `t_end` with fixed-step RK4.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.
    rho0 : pyvdp.model.DensityMatrix
        Initial state.
    t_end : float
        Propagation time, >= 0.
    dt : float, optional
        Maximum step size. Defaults to `default_time_step`. The step is
        shortened so that an integer number of steps reaches `t_end`.

    Returns
    -------
    pyvdp.model.DensityMatrix
        The state at time `t_end`.

    Raises
    ------
    pyvdp.util.errors.StepUnstable
        If the trace drifts by more than 1e-6.

    """
    if t_end < 0:
        raise InvalidParameterError(
            "Propagation time should be non-negative, got {}.".format(t_end))
    liouvillian = build_liouvillian(params, rho0.dim)
    if dt is None:
        dt = default_time_step(liouvillian)
    n_steps = int(math.ceil(t_end / dt)) if t_end > 0 else 0
    if n_steps == 0:
        return DensityMatrix(rho0.entries.copy())
    dt = t_end / n_steps

    x = rho0.to_vector().astype(complex)
    trace0 = rho0.trace()
    diagonal = np.arange(rho0.dim) * (rho0.dim + 1)
    for step in range(n_steps):
        x, _ = _rk4_step(liouvillian.matrix, x, dt)
        if abs(np.sum(x[diagonal]) - trace0) > TRACE_DRIFT_TOL:
            raise StepUnstable(
                "Trace drifted by more than {:g} after {} steps of size "
                "{:.3g}.".format(TRACE_DRIFT_TOL, step + 1, dt))
    return DensityMatrix.from_vector(x, rho0.dim)


def evolve_to_steady(params, rho0, dt=None, t_max=1e4, tol=1e-10):
    """Integrate the master equation until the state stops changing.

    Parameters
    ----------
    params : pyvdp.model.VdpParams
        Model rates.
    rho0 : pyvdp.model.DensityMatrix
        Normalized initial state; its dimension fixes the truncation.
    dt : float, optional
        Step size. Defaults to `default_time_step`.
    t_max : float
        Maximum integration time.
    tol : float
        The integration stops once the infinity norm of the time derivative
        drops below `tol`.

    Returns
    -------
    SteadyStateResult
        The final state, with the norm of its time derivative as residual.

    Raises
    ------
    pyvdp.util.errors.NotConverged
        If `t_max` is reached first.
    pyvdp.util.errors.StepUnstable
        If the trace drifts by more than 1e-6.

    """
    if rho0.dim < 3:
        raise DimensionMismatchError(
            "At least 3 levels are required, got {}.".format(rho0.dim))
    liouvillian = build_liouvillian(params, rho0.dim)
    if dt is None:
        dt = default_time_step(liouvillian)

    matrix = liouvillian.matrix
    x = rho0.to_vector().astype(complex)
    trace0 = rho0.trace()
    diagonal = np.arange(rho0.dim) * (rho0.dim + 1)
    max_steps = int(math.ceil(t_max / dt))

    for step in range(max_steps + 1):
        x_new, rate = _rk4_step(matrix, x, dt)
        derivative = float(np.max(np.abs(rate)))
        if derivative < tol:
            rho = DensityMatrix.from_vector(x, rho0.dim).hermitian_part()
            return SteadyStateResult(params, rho, derivative,
                                     tail_mass(rho), None, 'evolve')
        x = x_new
        if abs(np.sum(x[diagonal]) - trace0) > TRACE_DRIFT_TOL:
            raise StepUnstable(
                "Trace drifted by more than {:g} after {} steps of size "
                "{:.3g}.".format(TRACE_DRIFT_TOL, step + 1, dt))

    raise NotConverged(
        "Time derivative {:.3g} still above {:.3g} at t = {:g}.".format(
            derivative, tol, t_max))
