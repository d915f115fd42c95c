"""Exception hierarchy for hyperspin."""

from __future__ import annotations


class HyperspinError(Exception):
    """Base class for all hyperspin errors."""


class NotHermitianError(HyperspinError):
    """Matrix handed to a Hermitian-only routine is not Hermitian."""


class UnknownChannelError(HyperspinError):
    """Requested production channel is not in the registry."""


class NegativeDiscriminantError(HyperspinError):
    """Radicand of the correlation-block diagonalization is negative.

    Never expected for valid channel parameters; signals a parameter bug.
    """


class NegativeTimeError(HyperspinError):
    """Evolution time must be non-negative."""


class InvalidKernelError(HyperspinError):
    """Memory-kernel value outside [-1, 1], so no valid flip probability."""


class NotXStateError(HyperspinError):
    """Density matrix has support outside the X (diagonal + anti-diagonal) pattern."""


class UnknownPresetError(HyperspinError):
    """Requested figure preset id is not registered."""


class DomainError(HyperspinError):
    """Scalar argument outside its documented domain."""


class GridSyntaxError(HyperspinError):
    """Malformed sweep-grid specification string."""
