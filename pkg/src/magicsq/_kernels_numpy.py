"""Pure-numpy implementations of the hot kernels.

These are the fallback twins of the jitted kernels in ``_kernels_numba``;
``magicsq.backends`` picks one set at import time (``MAGICSQ_BACKEND`` env
flag) and can switch at runtime. Both implementations use the same pivot
order and rotation formulas so results agree to rounding error.
"""

from __future__ import annotations

import numpy as np


def kraus_apply(ops: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Sum of E rho E^dagger over a stacked (K, d, d) operator array."""
    return np.einsum("kij,jl,kml->im", ops, rho, ops.conj(), optimize=True)


def tensor_pow4(ops: np.ndarray) -> np.ndarray:
    """All n^4 ordered four-fold Kronecker products of a stack of 2x2 operators.

    Output index ((k1*n + k2)*n + k3)*n + k4 holds ops[k1] (x) ops[k2] (x)
    ops[k3] (x) ops[k4], first factor most significant.
    """
    prod = np.einsum("aij,bkl,cmn,dpq->abcdikmpjlnq", ops, ops, ops, ops)
    n = ops.shape[0]
    return np.ascontiguousarray(prod.reshape(n**4, 16, 16))


def jacobi_eigh(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Sweeps row-major over the upper triangle, annihilating each pivot with a
    phased Givens rotation, until the off-diagonal Frobenius norm drops to
    ``tol`` or ``max_sweeps`` is exhausted. Row and column updates are
    vectorized; everything else mirrors the numba twin.

    Returns (eigenvalues, eigenvectors, converged) with eigenvalues unsorted
    and eigenvectors as matching columns.
    """
    n = a.shape[0]
    A = np.array(a, dtype=np.complex128, copy=True)
    V = np.eye(n, dtype=np.complex128)
    converged = False
    skip = tol / (2.0 * n) if n else tol
    for _ in range(max_sweeps):
        off = A - np.diag(np.diagonal(A))
        if np.linalg.norm(off) <= tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                w = apq / r
                wc = w.conjugate()
                tau = (A[q, q].real - A[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * wc * col_q
                A[:, q] = s * col_p + c * wc * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * w * row_q
                A[q, :] = s * row_p + c * w * row_q
                v_p = V[:, p].copy()
                v_q = V[:, q].copy()
                V[:, p] = c * v_p - s * wc * v_q
                V[:, q] = s * v_p + c * wc * v_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
    else:
        converged = np.linalg.norm(A - np.diag(np.diagonal(A))) <= tol
    return np.diagonal(A).real.copy(), V, converged
