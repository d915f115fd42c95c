"""Classically correlated two-qubit dephasing channel.

Both qubits see the same random-telegraph phase noise; consecutive
applications of the single-qubit channel share a classical correlation
``mu`` (0 independent, 1 perfectly correlated).  The ensemble-averaged
telegraph kernel ``K(t)`` fixes the single-qubit flip probability
``p = (1 - K)/2``; together with ``mu`` this yields the joint Kraus
probabilities and, for X states, the single closed-form survival factor

    eta = K(t)**2 + (1 - K(t)**2) * mu

multiplying the two anti-diagonal entries.

Kernel conventions.  With ``u = 1/(2*tau)`` and ``v = sqrt(|u*u - 1|)`` the
damped-oscillator pairings are used: cos/sin for ``4*tau > 1`` and
cosh/sinh for ``4*tau < 1``, both with coefficient ``u/v``.  These are the
only pairings compatible with K(0) = 1, K'(0) = 0 and |K| <= 1, i.e. with
``p`` staying a probability; see docs/errata.md for the variants they
replace and the numbers that change.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InvalidKernelError, NegativeTimeError
from .linalg import Array, PAULI
from .production import DensityMatrix4

BOUNDARY_ATOL = 1e-9
KERNEL_LIMIT_V = 1e-6
PROB_ATOL = 1e-12


class Regime(enum.Enum):
    """Dephasing regime, decided by the sign of 4*tau - 1."""

    MARKOVIAN = "markovian"
    NON_MARKOVIAN = "non_markovian"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class ChannelConfig:
    """Channel parameters: correlation strength ``mu`` and time constant ``tau``.

    ``omega`` is the telegraph coin amplitude; it is frozen at 1 and carried
    only for documentation.
    """

    mu: float
    tau: float
    omega: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.mu <= 1.0:
            raise DomainError(f"mu must be in [0, 1], got {self.mu}")
        if not self.tau > 0.0:
            raise DomainError(f"tau must be > 0, got {self.tau}")
        if self.omega != 1.0:
            raise DomainError("omega is fixed at 1")

    @property
    def regime(self) -> Regime:
        x = 4.0 * self.tau - 1.0
        if abs(x) < BOUNDARY_ATOL:
            return Regime.BOUNDARY
        return Regime.NON_MARKOVIAN if x > 0 else Regime.MARKOVIAN


@dataclass(frozen=True)
class KernelValue:
    """Kernel sample ``k = K(t)`` together with the rate constants u, v."""

    k: float
    u: float
    v: float


def memory_kernel(t: float, cfg: ChannelConfig) -> KernelValue:
    """Ensemble-averaged telegraph dephasing kernel K(t).

    Guarantees K(0) = 1, dK/dt(0) = 0 and |K| <= 1.  Markovian decay is
    monotone; for 4*tau > 1 the kernel oscillates with period 2*pi/v.

    Raises
    ------
    NegativeTimeError
        If ``t < 0``.
    """
    if t < 0.0:
        raise NegativeTimeError(f"time must be >= 0, got {t}")
    u = 1.0 / (2.0 * cfg.tau)
    v = math.sqrt(abs(u * u - 1.0))
    damp = math.exp(-u * t)
    regime = cfg.regime
    if regime is Regime.BOUNDARY or v < KERNEL_LIMIT_V:
        # v -> 0 limit of either pairing; also used on the 4*tau = 1 seam.
        k = damp * (1.0 + u * t)
    elif regime is Regime.NON_MARKOVIAN:
        k = damp * (math.cos(v * t) + (u / v) * math.sin(v * t))
    elif v * t < 30.0:
        k = damp * (math.cosh(v * t) + (u / v) * math.sinh(v * t))
    else:
        # Same hyperbolic combination in overflow-safe form; v < u here, so
        # both exponents are negative.
        k = 0.5 * (1.0 + u / v) * math.exp((v - u) * t) + 0.5 * (1.0 - u / v) * math.exp(
            -(v + u) * t
        )
    return KernelValue(k, u, v)


def flip_probability(kernel: KernelValue | float) -> float:
    """Phase-flip probability p = (1 - K)/2.

    Raises
    ------
    InvalidKernelError
        If |K| exceeds 1 beyond roundoff, which would make p leave [0, 1].
    """
    k = kernel.k if isinstance(kernel, KernelValue) else float(kernel)
    if abs(k) > 1.0 + PROB_ATOL:
        raise InvalidKernelError(f"|K| = {abs(k)} > 1")
    return min(max(0.5 * (1.0 - k), 0.0), 1.0)


@dataclass(frozen=True)
class JointProbabilities:
    """4x4 table p[i, j] over Pauli indices (0, x, y, z) for the pair channel."""

    table: Array = field(repr=False)

    def __post_init__(self) -> None:
        t = np.asarray(self.table, dtype=float).copy()
        if t.shape != (4, 4):
            raise DomainError(f"joint table must be 4x4, got {t.shape}")
        if np.any(t < -PROB_ATOL):
            raise DomainError(f"negative joint probability {t.min():.3e}")
        if abs(t.sum() - 1.0) > PROB_ATOL:
            raise DomainError(f"joint probabilities sum to {t.sum():.12g}, not 1")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)


def joint_probabilities(p: float, mu: float) -> JointProbabilities:
    """Joint two-qubit Kraus weights for flip probability ``p`` and correlation ``mu``.

    ``p[i, j] = (1 - mu) * p_i * p_j + mu * p_i * delta_ij`` with the
    single-qubit distribution (1-p, 0, 0, p); only the four (identity, z)
    combinations can be populated.
    """
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p}")
    if not 0.0 <= mu <= 1.0:
        raise DomainError(f"mu must be in [0, 1], got {mu}")
    single = np.array([1.0 - p, 0.0, 0.0, p])
    table = (1.0 - mu) * np.outer(single, single) + mu * np.diag(single)
    return JointProbabilities(table)


def kraus_apply(rho: DensityMatrix4, jp: JointProbabilities) -> DensityMatrix4:
    """Apply the pair channel as the explicit 16-term Kraus sum.

    Each term conjugates by ``sqrt(p[i, j]) * sigma_i (x) sigma_j``; terms of
    zero weight contribute nothing but the loop is written against the full
    sum so channels with nonzero x/y weights reuse it unchanged.
    """
    out = np.zeros((4, 4), dtype=complex)
    m = rho.matrix
    for i in range(4):
        for j in range(4):
            w = jp.table[i, j]
            if w == 0.0:
                continue
            op = np.kron(PAULI[i], PAULI[j])
            out += w * (op @ m @ op.conj().T)
    return DensityMatrix4(out)


def decoherence_factor(t: float, cfg: ChannelConfig) -> float:
    """Anti-diagonal survival factor eta = K**2 + (1 - K**2)*mu.

    Equals 1 at t = 0, tends to ``mu`` as the kernel dies, and is
    non-decreasing in ``mu`` at fixed time.
    """
    k = memory_kernel(t, cfg).k
    k2 = k * k
    return k2 + (1.0 - k2) * cfg.mu


def dephase(rho: DensityMatrix4, eta: float) -> DensityMatrix4:
    """Scale the two anti-diagonal entries of an X state by ``eta``.

    Every density-matrix invariant survives this map for eta in [0, 1]
    (the block determinants only grow), so the result is wrapped without
    re-validation.
    """
    if not 0.0 <= eta <= 1.0 + PROB_ATOL:
        raise DomainError(f"eta must be in [0, 1], got {eta}")
    m = rho.matrix.copy()
    for i, j in ((0, 3), (3, 0), (1, 2), (2, 1)):
        m[i, j] *= eta
    return DensityMatrix4._trusted(m)


def evolve(rho0: DensityMatrix4, t: float, cfg: ChannelConfig) -> DensityMatrix4:
    """Closed-form channel action on an X state.

    Diagonal entries are untouched; the anti-diagonal picks up
    ``decoherence_factor(t, cfg)``.  Identical (to 1e-12) to routing the
    state through :func:`kraus_apply` with the matching joint table, which
    the test suite enforces as a standing oracle.
    """
    return dephase(rho0, decoherence_factor(t, cfg))
