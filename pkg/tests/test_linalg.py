import numpy as np
import pytest

from hyperspin import NotHermitianError, channel_params, density_matrix
from hyperspin.linalg import (
    SIGMA_0,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    pauli,
)

RNG = np.random.default_rng(20240817)


def random_complex(shape):
    return RNG.normal(size=shape) + 1j * RNG.normal(size=shape)


def test_pauli_constants():
    assert np.array_equal(pauli(0), np.eye(2))
    assert np.array_equal(pauli(1) @ pauli(1), np.eye(2))
    assert np.allclose(pauli(1) @ pauli(2), 1j * pauli(3))
    assert pauli(2)[0, 1] == -1j


def test_kron_identity():
    assert np.array_equal(kron(SIGMA_0, SIGMA_0), np.eye(4))


def test_kron_diagonal_pauli():
    assert np.array_equal(kron(SIGMA_Z, SIGMA_Z), np.diag([1.0, -1.0, -1.0, 1.0]))


def test_kron_permutation_structure():
    out = kron(SIGMA_X, SIGMA_X)
    assert np.array_equal(out, np.fliplr(np.eye(4)))


def test_kron_index_layout():
    a = random_complex((2, 2))
    b = random_complex((2, 2))
    out = kron(a, b)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    assert abs(out[2 * i + k, 2 * j + l] - a[i, j] * b[k, l]) < 1e-15


def test_kron_bilinear():
    a = random_complex((2, 2))
    b = random_complex((2, 2))
    alpha = 0.37 - 1.2j
    assert np.max(np.abs(kron(alpha * a, b) - alpha * kron(a, b))) < 1e-14
    assert np.max(np.abs(kron(a, alpha * b) - alpha * kron(a, b))) < 1e-14


def test_kron_trace_multiplicative():
    for _ in range(10):
        a = random_complex((2, 2))
        b = random_complex((2, 2))
        assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) < 1e-12


def test_partial_trace_maximally_mixed():
    out = partial_trace(np.eye(4) / 4.0, "first")
    assert np.max(np.abs(out - np.eye(2) / 2.0)) < 1e-12


def test_partial_trace_product_state():
    ket = np.zeros(4)
    ket[0] = 1.0
    rho = np.outer(ket, ket)
    out = partial_trace(rho, "first")
    assert np.max(np.abs(out - np.diag([1.0, 0.0]))) < 1e-12


def test_partial_trace_bell_state():
    bell = np.zeros(4)
    bell[0] = bell[3] = 1.0 / np.sqrt(2.0)
    rho = np.outer(bell, bell)
    for keep in ("first", "second"):
        out = partial_trace(rho, keep)
        assert np.max(np.abs(out - np.eye(2) / 2.0)) < 1e-12


def test_partial_trace_preserves_trace_and_hermiticity():
    m = random_complex((4, 4))
    m = m + m.conj().T
    for keep in ("first", "second"):
        out = partial_trace(m, keep)
        assert abs(np.trace(out) - np.trace(m)) < 1e-12
        assert np.max(np.abs(out - out.conj().T)) < 1e-12


def test_partial_trace_recovers_kron_factors():
    a = random_complex((2, 2))
    a = a + a.conj().T
    b = random_complex((2, 2))
    b = b + b.conj().T + 4.0 * np.eye(2)  # keep trace away from zero
    prod = kron(a, b)
    assert np.max(np.abs(partial_trace(prod, "first") / np.trace(b) - a)) < 1e-12
    assert np.max(np.abs(partial_trace(prod, "second") / np.trace(a) - b)) < 1e-12


def test_hermitian_eigenvalues_diagonal():
    vals = hermitian_eigenvalues(np.diag([4.0, 3.0, 2.0, 1.0]).astype(complex))
    assert np.array_equal(vals, [4.0, 3.0, 2.0, 1.0])


def test_hermitian_eigenvalues_scalar_matrix():
    vals = hermitian_eigenvalues(np.eye(4) / 4.0)
    assert np.allclose(vals, 0.25, atol=1e-14)


def test_hermitian_eigenvalues_recover_known_spectrum():
    diag = np.array([1.5, 0.25, -0.5, -2.0])
    for _ in range(10):
        q, _ = np.linalg.qr(random_complex((4, 4)))
        m = q @ np.diag(diag) @ q.conj().T
        vals = hermitian_eigenvalues(m)
        assert np.max(np.abs(vals - diag)) < 1e-9
        assert abs(vals.sum() - np.trace(m).real) < 1e-10


def test_hermitian_eigenvalues_rejects_non_hermitian():
    m = np.eye(4, dtype=complex)
    m[0, 1] = 1e-6
    with pytest.raises(NotHermitianError):
        hermitian_eigenvalues(m)


def test_production_state_is_rank_two():
    rho = density_matrix(channel_params("lambda"), np.pi / 2.0)
    vals = hermitian_eigenvalues(rho.matrix)
    assert vals[0] > 0.0 and vals[1] > 0.0
    assert abs(vals[2]) < 1e-9 and abs(vals[3]) < 1e-9
