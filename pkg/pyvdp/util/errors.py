# -*- coding: utf-8 -*-
"""Module grouping Exception and Warning classes."""


class VdpError(Exception):
    """General error within pyvdp."""
    pass


class InvalidParameterError(VdpError):
    """Error that occurs when physical or numerical parameters are outside
    their valid domain."""
    pass


class DimensionMismatchError(VdpError):
    """Error that occurs when a density matrix does not match the dimension
    of the operator it is combined with."""
    pass


class CapacityError(VdpError):
    """Error that occurs when the vectorized problem exceeds the dimensions
    that can be indexed on this platform."""
    pass


class SteadyStateError(VdpError):
    """General error while computing a steady state."""
    pass


class DegenerateSteadyState(SteadyStateError):
    """Error that occurs when the Liouvillian has more than one
    independent steady state, so the trace constraint does not fix a
    unique solution."""

    def __init__(self, message, nullspace_dim=None):
        super().__init__(message)
        self.nullspace_dim = nullspace_dim


class TruncationExceeded(SteadyStateError):
    """Error that occurs when the Fock truncation reached its maximum size
    while the occupation of the top levels is still above tolerance."""

    def __init__(self, message, n_levels=None, tail_mass=None):
        super().__init__(message)
        self.n_levels = n_levels
        self.tail_mass = tail_mass


class SolverSingular(SteadyStateError):
    """Error that occurs when the trace-constrained linear system is
    numerically singular or the solution misses the requested residual."""
    pass


class NotConverged(SteadyStateError):
    """Error that occurs when time integration did not reach a stationary
    state before the end time."""
    pass


class StepUnstable(SteadyStateError):
    """Error that occurs when time integration drifts away from unit trace,
    which signals a step size that is too large."""
    pass


class NonRealResponse(VdpError):
    """Error that occurs when the response has a significant imaginary
    part, which violates the real drive phase convention."""
    pass


class PassiveUndefined(VdpError):
    """Error that occurs when the passive susceptibility 2/gamma1_minus is
    requested without one-particle loss."""
    pass


class WignerError(VdpError):
    """General error regarding Wigner function evaluation."""
    pass


class WignerOverflowError(WignerError):
    """Error that occurs when the scaled Laguerre recurrence overflows,
    which happens beyond the supported truncation of 300 levels."""
    pass


class QuadratureUnderResolved(WignerError):
    """Error that occurs when the phase space quadrature cannot reproduce a
    reference density matrix to the required accuracy."""
    pass


class InvalidGridError(WignerError):
    """Error that occurs when a grid is not suited for the requested
    operation."""
    pass


class ConfigError(VdpError):
    """Error that occurs when parsing or validating a run configuration.

    Attributes
    ----------
    field : str or None
        Name of the offending configuration key, if known.
    line : int or None
        Line number in the configuration document, if known.

    """

    def __init__(self, message, field=None, line=None):
        prefix = ''
        if line is not None:
            prefix += 'line {:d}: '.format(line)
        if field is not None:
            prefix += "field '{}': ".format(field)
        super().__init__(prefix + message)
        self.field = field
        self.line = line


class SweepPointError(VdpError):
    """Error that occurs in strict mode when a single sweep point fails."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class VdpWarning(Warning):
    """General warning in pyvdp."""
    pass


class TruncationWarning(VdpWarning):
    """Emitted when the top Fock levels carry more than the allowed
    occupation, so identities relying on the untruncated ladder algebra no
    longer hold."""


class NegativeVarianceWarning(VdpWarning):
    """Emitted when the noise variance is slightly negative because of
    round-off and is clamped to zero."""


class LimitCycleAmplitudeWarning(VdpWarning):
    """Emitted when the classical response is requested at zero drive in
    the limit-cycle phase, where only the phase-free amplitude is
    defined."""
