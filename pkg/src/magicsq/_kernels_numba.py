"""Numba-jitted implementations of the hot kernels.

Same contracts as ``_kernels_numpy``; see that module for documentation.
All kernels assume C-contiguous complex128 input (the dispatch layer in
``magicsq.backends`` normalizes arguments).
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def kraus_apply(ops, rho):
    K, d, _ = ops.shape
    out = np.zeros((d, d), dtype=np.complex128)
    for k in range(K):
        E = np.ascontiguousarray(ops[k])
        Ed = np.ascontiguousarray(E.conj().T)
        out += np.dot(np.dot(E, rho), Ed)
    return out


@njit(cache=True)
def tensor_pow4(ops):
    n = ops.shape[0]
    out = np.empty((n**4, 16, 16), dtype=np.complex128)
    idx = 0
    for k1 in range(n):
        for k2 in range(n):
            for k3 in range(n):
                for k4 in range(n):
                    for rr in range(16):
                        r1 = (rr >> 3) & 1
                        r2 = (rr >> 2) & 1
                        r3 = (rr >> 1) & 1
                        r4 = rr & 1
                        for cc in range(16):
                            c1 = (cc >> 3) & 1
                            c2 = (cc >> 2) & 1
                            c3 = (cc >> 1) & 1
                            c4 = cc & 1
                            out[idx, rr, cc] = (
                                ops[k1, r1, c1] * ops[k2, r2, c2]
                            ) * (ops[k3, r3, c3] * ops[k4, r4, c4])
                    idx += 1
    return out


@njit(cache=True)
def jacobi_eigh(a, tol, max_sweeps):
    n = a.shape[0]
    A = a.copy()
    V = np.eye(n, dtype=np.complex128)
    converged = False
    skip = tol / (2.0 * n) if n else tol
    for _sweep in range(max_sweeps):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                x = A[i, j]
                off2 += 2.0 * (x.real * x.real + x.imag * x.imag)
        if math.sqrt(off2) <= tol:
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
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    aip = A[i, p]
                    aiq = A[i, q]
                    A[i, p] = c * aip - s * wc * aiq
                    A[i, q] = s * aip + c * wc * aiq
                for i in range(n):
                    api = A[p, i]
                    aqi = A[q, i]
                    A[p, i] = c * api - s * w * aqi
                    A[q, i] = s * api + c * w * aqi
                for i in range(n):
                    vip = V[i, p]
                    viq = V[i, q]
                    V[i, p] = c * vip - s * wc * viq
                    V[i, q] = s * vip + c * wc * viq
                A[p, q] = 0.0
                A[q, p] = 0.0
                A[p, p] = A[p, p].real + 0.0j
                A[q, q] = A[q, q].real + 0.0j
    if not converged:
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                x = A[i, j]
                off2 += 2.0 * (x.real * x.real + x.imag * x.imag)
        converged = math.sqrt(off2) <= tol
    vals = np.empty(n, dtype=np.float64)
    for i in range(n):
        vals[i] = A[i, i].real
    return vals, V, converged
