"""Kernel backend selection: numba-jitted loops or a pure-numpy fallback.

Everything numerically hot in this package flows through three kernels:
Kraus application, the four-qubit tensor extension, and the cyclic Jacobi
eigensolver. Two interchangeable implementations exist. The ``MAGICSQ_BACKEND``
environment variable ("numba" or "numpy") picks the initial one; when unset,
numba is used if importable. ``set_backend`` switches at runtime, which the
benchmark script uses to time both paths in one process.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_numpy

try:
    from . import _kernels_numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _kernels_numba = None
    HAS_NUMBA = False

ENV_VAR = "MAGICSQ_BACKEND"

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

_MODULES = {"numpy": _kernels_numpy}
if HAS_NUMBA:
    _MODULES["numba"] = _kernels_numba


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_MODULES))


def _resolve_initial() -> str:
    requested = os.environ.get(ENV_VAR, "").strip().lower()
    if not requested:
        return "numba" if HAS_NUMBA else "numpy"
    if requested not in _MODULES:
        raise ValueError(
            f"{ENV_VAR}={requested!r} is not a known backend; "
            f"choose one of {available_backends()}"
        )
    return requested


_active = _resolve_initial()


def get_backend() -> str:
    """Name of the backend currently serving kernel calls."""
    return _active


def set_backend(name: str) -> None:
    """Switch kernel implementations at runtime."""
    global _active
    if name not in _MODULES:
        raise ValueError(f"unknown backend {name!r}; choose one of {available_backends()}")
    _active = name


def _as_c128(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(a, dtype=np.complex128))


def kraus_apply(ops: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Sum of E rho E^dagger over the stacked (K, d, d) operators."""
    return _MODULES[_active].kraus_apply(_as_c128(ops), _as_c128(rho))


def tensor_pow4(ops: np.ndarray) -> np.ndarray:
    """All ordered four-fold Kronecker products of a (n, 2, 2) stack."""
    return _MODULES[_active].tensor_pow4(_as_c128(ops))


def jacobi_eigh(
    a: np.ndarray,
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray, bool]:
    """Raw cyclic-Jacobi diagonalization; returns (values, vectors, converged).

    Values are unsorted. Callers wanting sorted output and convergence
    enforcement should use ``magicsq.linalg.hermitian_eigensystem``.
    """
    return _MODULES[_active].jacobi_eigh(_as_c128(a), float(tol), int(max_sweeps))
