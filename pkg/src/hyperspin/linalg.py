"""Dense complex matrix algebra for 2x2 and 4x4 matrices.

Everything here is a pure function over small numpy arrays.  The whole
problem lives in dimension 4 (two qubits), so no general N-dimensional
machinery is provided: fixed sizes keep every routine exhaustively
testable.  All inputs are O(1) in magnitude, so tolerances are absolute.
"""

from __future__ import annotations

from typing import Literal

import numpy as np

from .errors import DomainError, NotHermitianError

Array = np.ndarray

HERMITICITY_ATOL = 1e-10
EIGENVALUE_ATOL = 1e-9
TRACE_ATOL = 1e-10

# Pauli matrices in the standard convention (sigma_y with -i/+i off-diagonal)
# plus the 2x2 identity as index 0.
SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (SIGMA_0, SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in PAULI:
    _m.setflags(write=False)


def pauli(index: int) -> Array:
    """Return the Pauli matrix for ``index`` (0 identity, 1 x, 2 y, 3 z)."""
    if index not in (0, 1, 2, 3):
        raise DomainError(f"Pauli index must be in 0..3, got {index!r}")
    return PAULI[index]


def as_matrix(m: Array, dim: int) -> Array:
    """Validate and return ``m`` as a (dim, dim) complex array with finite entries."""
    out = np.asarray(m, dtype=complex)
    if out.shape != (dim, dim):
        raise DomainError(f"expected a {dim}x{dim} matrix, got shape {out.shape}")
    if not np.all(np.isfinite(out.view(float))):
        raise DomainError("matrix entries must be finite")
    return out


def dagger(m: Array) -> Array:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def kron(a: Array, b: Array) -> Array:
    """Kronecker product of two 2x2 matrices.

    Layout: ``kron(a, b)[2*i + k, 2*j + l] == a[i, j] * b[k, l]``.
    """
    a = as_matrix(a, 2)
    b = as_matrix(b, 2)
    return np.kron(a, b)


def is_hermitian(m: Array, atol: float = HERMITICITY_ATOL) -> bool:
    """True if max-entry deviation from the adjoint is below ``atol``."""
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= atol)


def hermitian_eigenvalues(m: Array, atol: float = HERMITICITY_ATOL) -> Array:
    """Real eigenvalues of a Hermitian 4x4 matrix, sorted descending.

    Raises
    ------
    NotHermitianError
        If any entry of ``m - m^dagger`` exceeds ``atol`` in magnitude.
    """
    m = as_matrix(m, 4)
    if not is_hermitian(m, atol):
        raise NotHermitianError(
            f"matrix deviates from Hermitian by {np.max(np.abs(m - m.conj().T)):.3e}"
        )
    return np.sort(np.linalg.eigvalsh(m))[::-1]


def partial_trace(rho: Array, keep: Literal["first", "second"]) -> Array:
    """Trace out one qubit of a 4x4 two-qubit operator.

    Parameters
    ----------
    rho:
        4x4 matrix on the tensor product (first qubit) x (second qubit).
    keep:
        Which subsystem the returned 2x2 matrix describes.
    """
    rho = as_matrix(rho, 4)
    r = rho.reshape(2, 2, 2, 2)
    if keep == "first":
        return np.einsum("ikjk->ij", r)
    if keep == "second":
        return np.einsum("kikj->ij", r)
    raise DomainError(f"keep must be 'first' or 'second', got {keep!r}")
