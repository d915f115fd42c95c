"""Quantum-resource measures on dephased two-qubit X states.

Four measures are evaluated on the same state: bidirectional steering with
its one-way/two-way/no-way classification, concurrence with its entropic
transform (entanglement of formation), geometric quantum discord in the
Schatten 1-norm via the Fano-Bloch correlation components, and the l1-norm
of coherence.  The input matrices already carry any decoherence factor in
their anti-diagonal entries; nothing here re-applies channel physics.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError
from .linalg import Array, partial_trace
from .production import DensityMatrix4, HyperonChannel, xstate_params

SQRT3 = math.sqrt(3.0)
GQD_DENOMINATOR_ATOL = 1e-14


class SteeringClass(enum.Enum):
    NO_WAY = "no_way"
    ONE_WAY_AB = "one_way_ab"
    ONE_WAY_BA = "one_way_ba"
    TWO_WAY = "two_way"


@dataclass(frozen=True)
class SteeringResult:
    """Steerabilities in both directions plus their asymmetry and class.

    ``s_ab`` is first-to-second qubit (hyperon steers antihyperon), ``s_ba``
    the reverse; ``delta_s = |s_ab - s_ba|``.
    """

    s_ab: float
    s_ba: float
    delta_s: float
    steering_class: SteeringClass


@dataclass(frozen=True)
class FanoBloch:
    """Nonzero correlation components of the Fano-Bloch decomposition."""

    r11: float
    r22: float
    r33: float
    r03: float
    r30: float

    def __post_init__(self) -> None:
        for r in (self.r11, self.r22, self.r33, self.r03, self.r30):
            if abs(r) > 1.0 + 1e-12:
                raise DomainError(f"Bloch component {r} outside [-1, 1]")


@dataclass(frozen=True)
class MeasureRecord:
    """All measures of one evolved state, plus the channel factors that made it."""

    steering: SteeringResult
    concurrence: float
    eof: float
    gqd: float
    coherence_l1: float
    eta: float
    kernel: float


def steering_operator(
    rho: DensityMatrix4, direction: Literal["ab", "ba"]
) -> Array:
    """Steering operator: affine blend of the state with a one-sided marginal.

    ``tau = rho/sqrt(3) + (1 - 1/sqrt(3)) * sigma`` where ``sigma`` replaces
    the steering party by the maximally mixed state and keeps the steered
    party's marginal: for direction "ab" (first steers second)
    ``sigma = I/2 (x) rho_B``, for "ba" ``sigma = rho_A (x) I/2``.  The
    output is Hermitian with unit trace.
    """
    m = rho.matrix
    eye = np.eye(2, dtype=complex)
    if direction == "ab":
        sigma = np.kron(eye / 2.0, partial_trace(m, "second"))
    elif direction == "ba":
        sigma = np.kron(partial_trace(m, "first"), eye / 2.0)
    else:
        raise DomainError(f"direction must be 'ab' or 'ba', got {direction!r}")
    return m / SQRT3 + (1.0 - 1.0 / SQRT3) * sigma


def steering_bounds(rho: DensityMatrix4) -> tuple[float, float, float]:
    """Separable-model bounds entering the X-state steering inequalities.

    Returns ``(corner_bound, direction_bias, inner_bound)``: the thresholds
    that the squared anti-diagonal entries must exceed for the corner and
    inner branches, and the population-asymmetry term that splits the two
    steering directions.  Equal inner populations force the bias to zero.
    """
    a, b, c, d = rho.rho11, rho.rho22, rho.rho33, rho.rho44
    shared = 0.25 * (a + d) * (b + c)
    corner = 0.5 * (2.0 - SQRT3) * a * d + 0.5 * (2.0 + SQRT3) * b * c + shared
    inner = 0.5 * (2.0 + SQRT3) * a * d + 0.5 * (2.0 - SQRT3) * b * c + shared
    bias = 0.25 * (a - d) * (b - c)
    return corner, bias, inner


def steering(rho: DensityMatrix4) -> SteeringResult:
    """Bidirectional steerability of an evolved X state.

    Each direction is ``max{0, (8/sqrt(3)) * max(branches)}`` where the
    branches compare the squared anti-diagonal magnitudes against the
    corner/inner bounds, biased by the population-asymmetry term (minus for
    first-to-second, plus for the reverse).
    """
    corner, bias, inner = steering_bounds(rho)
    w2 = abs(rho.rho14) ** 2
    z2 = abs(rho.rho23) ** 2
    scale = 8.0 / SQRT3
    s_ab = max(0.0, scale * max(w2 - corner - bias, z2 - inner - bias))
    s_ba = max(0.0, scale * max(w2 - corner + bias, z2 - inner + bias))
    if s_ab > 0.0 and s_ba > 0.0:
        cls = SteeringClass.TWO_WAY
    elif s_ab > 0.0:
        cls = SteeringClass.ONE_WAY_AB
    elif s_ba > 0.0:
        cls = SteeringClass.ONE_WAY_BA
    else:
        cls = SteeringClass.NO_WAY
    return SteeringResult(s_ab, s_ba, abs(s_ab - s_ba), cls)


def concurrence(rho: DensityMatrix4) -> float:
    """Concurrence of a dephased rank-2 production X state.

    The family built here satisfies ``rho11*rho44 == rho14(0)**2`` and
    ``rho22*rho33 == rho23(0)**2`` at full coherence, collapsing the Wootters
    X-state expression to the anti-diagonal difference

        C = 2 * max{|rho23| - |rho14|, |rho14| - |rho23|, 0},

    which then scales linearly with the survival factor carried by the
    anti-diagonal.  Exact for the states this package produces; coincides
    with the general Wootters value at full coherence.
    """
    w = abs(rho.rho14)
    z = abs(rho.rho23)
    return 2.0 * max(z - w, w - z, 0.0)


def concurrence_closed(ch: HyperonChannel, phi: float, eta: float) -> float:
    """Closed-form concurrence ``|eta * gamma2|`` straight from channel and angle."""
    if not 0.0 <= eta <= 1.0 + 1e-12:
        raise DomainError(f"eta must be in [0, 1], got {eta}")
    return abs(eta * xstate_params(ch, phi).gamma2)


def _binary_entropy(x: float) -> float:
    # 0*log(0) := 0 at both endpoints.
    total = 0.0
    for p in (x, 1.0 - x):
        if p > 0.0:
            total -= p * math.log2(p)
    return total


def entanglement_of_formation(c: float) -> float:
    """Entropic transform of the concurrence: E = h((1 + sqrt(1 - C^2))/2).

    Monotone from E(0) = 0 to E(1) = 1.

    Raises
    ------
    DomainError
        If ``c`` is outside [0, 1] by more than 1e-12.
    """
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise DomainError(f"concurrence must be in [0, 1], got {c}")
    c = min(max(c, 0.0), 1.0)
    return _binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def fano_bloch(rho: DensityMatrix4) -> FanoBloch:
    """Fano-Bloch correlation components of an X state.

    ``r11/r22/r33`` are the diagonal correlation entries, ``r03/r30`` the
    two local-z components written out from their trace definitions
    ``tr[(sigma_0 (x) sigma_3) rho]`` and ``tr[(sigma_3 (x) sigma_0) rho]``.
    """
    a, b, c, d = rho.rho11, rho.rho22, rho.rho33, rho.rho44
    z = rho.rho23.real
    w = rho.rho14.real
    return FanoBloch(
        r11=2.0 * (z + w),
        r22=2.0 * (z - w),
        r33=1.0 - 2.0 * (b + c),
        r03=a - b + c - d,
        r30=a + b - c - d,
    )


def geometric_discord(rho: DensityMatrix4) -> float:
    """Schatten-1-norm geometric quantum discord of an X state (closed form).

    Built from the Fano-Bloch components with
    ``rmax^2 = max(r22^2 + r30^2, r33^2)`` and
    ``rmin^2 = min(r11^2, r33^2)``.  When the denominator vanishes all
    components vanish with it (fully dephased axial states), so 0 is
    returned as the continuous limit.
    """
    r = fano_bloch(rho)
    r11sq = r.r11**2
    r22sq = r.r22**2
    rmax_sq = max(r22sq + r.r30**2, r.r33**2)
    rmin_sq = min(r11sq, r.r33**2)
    den = rmax_sq - rmin_sq + r11sq - r22sq
    if den < GQD_DENOMINATOR_ATOL:
        return 0.0
    num = max(r11sq * rmax_sq - r22sq * rmin_sq, 0.0)
    return 0.5 * math.sqrt(num / den)


def coherence_l1(rho: DensityMatrix4) -> float:
    """l1-norm of coherence: sum of the magnitudes of all off-diagonal entries."""
    off = np.abs(rho.matrix)
    np.fill_diagonal(off, 0.0)
    return float(off.sum())


def measure_all(rho: DensityMatrix4, eta: float, kernel: float) -> MeasureRecord:
    """Evaluate every measure on one state and bundle the result.

    ``eta`` and ``kernel`` are recorded for reporting only; the state already
    carries the decoherence factor.
    """
    c = concurrence(rho)
    return MeasureRecord(
        steering=steering(rho),
        concurrence=c,
        eof=entanglement_of_formation(c),
        gqd=geometric_discord(rho),
        coherence_l1=coherence_l1(rho),
        eta=eta,
        kernel=kernel,
    )
