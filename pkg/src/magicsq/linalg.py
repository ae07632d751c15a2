"""Dense complex linear algebra for small operator dimensions (2 through 256).

Matrices are plain complex128 numpy arrays. The only nontrivial routine is
the Hermitian eigensolver, a cyclic Jacobi iteration dispatched through
``magicsq.backends``; it exists to support positive-semidefiniteness checks
on density matrices and is deliberately robust rather than fast.
"""

from __future__ import annotations

import numpy as np

from . import backends

DEFAULT_ATOL = 1e-10

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
for _m in (IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)


def _as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"incompatible shapes for product: {a.shape} and {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose. Involutive exactly: adjoint(adjoint(a)) == a."""
    return np.ascontiguousarray(_as_matrix(a).conj().T)


def tensor(a, b) -> np.ndarray:
    """Kronecker product, first factor as the more significant block index."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def trace(a) -> complex:
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"trace requires a square matrix, got shape {a.shape}")
    return complex(np.trace(a))


def outer(v, w) -> np.ndarray:
    """Rank-1 operator |v><w| (the second argument is conjugated)."""
    return np.outer(np.asarray(v, dtype=complex), np.conj(np.asarray(w, dtype=complex)))


def is_hermitian(a, atol: float = DEFAULT_ATOL) -> bool:
    a = _as_matrix(a)
    return a.shape[0] == a.shape[1] and np.abs(a - a.conj().T).max() <= atol


def hermitian_eigensystem(a, herm_atol: float = DEFAULT_ATOL):
    """Eigenvalues (ascending) and matching eigenvector columns of a Hermitian matrix.

    Runs cyclic Jacobi sweeps until the off-diagonal Frobenius norm falls
    below 1e-12, capped at 100 sweeps. Raises if the input is not Hermitian
    within ``herm_atol`` or if the iteration fails to converge.
    """
    a = _as_matrix(a)
    if not is_hermitian(a, herm_atol):
        raise ValueError("matrix is not Hermitian within tolerance")
    h = 0.5 * (a + a.conj().T)
    vals, vecs, converged = backends.jacobi_eigh(h)
    if not converged:
        raise RuntimeError("Jacobi iteration did not converge within the sweep cap")
    order = np.argsort(vals, kind="stable")
    return vals[order], vecs[:, order]


def hermitian_eigenvalues(a, herm_atol: float = DEFAULT_ATOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix in ascending order."""
    vals, _ = hermitian_eigensystem(a, herm_atol)
    return vals


def validate_state_vector(v, atol: float = 1e-12) -> np.ndarray:
    """Check finiteness and unit norm; returns the vector as complex128."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-d state vector, got shape {v.shape}")
    if not (np.all(np.isfinite(v.real)) and np.all(np.isfinite(v.imag))):
        raise ValueError("state vector contains non-finite entries")
    norm2 = float(np.sum(np.abs(v) ** 2))
    if abs(norm2 - 1.0) > atol:
        raise ValueError(f"state vector is not normalized: |v|^2 = {norm2!r}")
    return v


def validate_density_matrix(
    rho,
    trace_atol: float = DEFAULT_ATOL,
    herm_atol: float = DEFAULT_ATOL,
    eig_floor: float = -1e-9,
    check_psd: bool = True,
) -> np.ndarray:
    """Check unit trace, Hermiticity and (optionally) positive semidefiniteness.

    The PSD check diagonalizes, which is the expensive part; callers on hot
    paths can disable it and rely on the cheap invariants.
    """
    rho = _as_matrix(rho)
    if rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    if not (np.all(np.isfinite(rho.real)) and np.all(np.isfinite(rho.imag))):
        raise ValueError("density matrix contains non-finite entries")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_atol:
        raise ValueError(f"density matrix trace {tr!r} is not 1 within {trace_atol}")
    if not is_hermitian(rho, herm_atol):
        raise ValueError("density matrix is not Hermitian within tolerance")
    if check_psd:
        smallest = hermitian_eigenvalues(rho, herm_atol)[0]
        if smallest < eig_floor:
            raise ValueError(f"density matrix has negative eigenvalue {smallest!r}")
    return rho


def is_unitary(u, atol: float = DEFAULT_ATOL) -> bool:
    u = _as_matrix(u)
    if u.shape[0] != u.shape[1]:
        return False
    return np.abs(u.conj().T @ u - np.eye(u.shape[0])).max() <= atol
