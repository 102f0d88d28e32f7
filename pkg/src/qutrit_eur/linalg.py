"""Dense complex linear algebra for 3x3 and 9x9 Hermitian problems.

Matrices are plain complex numpy arrays. Composite two-qutrit indices
follow r = 3*a + b, with subsystem A the left (most significant) tensor
factor; every composite operation in this package assumes that layout.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10


def hermitian_part(m: np.ndarray) -> np.ndarray:
    """Return (M + M^dagger) / 2."""
    return (m + m.conj().T) / 2


def require_hermitian(m: np.ndarray, name: str = "matrix", atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Check entrywise Hermiticity within atol and return the Hermitian part."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    dev = np.max(np.abs(m - m.conj().T))
    if dev > atol:
        raise ValueError(f"{name} is not Hermitian: max|M - M^dagger| = {dev:.3e} > {atol:.0e}")
    return hermitian_part(m)


def require_density_matrix(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Validate a density matrix (Hermitian, unit trace, eigenvalues >= -1e-10).

    Returns the Hermitian part so downstream numerics start from a clean
    operator; round-off from repeated channel application accumulates
    asymmetry of order 1e-15.
    """
    rho = require_hermitian(rho, name=name)
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValueError(f"{name} must have unit trace, got {tr!r}")
    w_min = float(np.linalg.eigvalsh(rho)[0])
    if w_min < EIGENVALUE_FLOOR:
        raise ValueError(f"{name} has negative eigenvalue {w_min:.3e}; not a state")
    return rho


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product with A as the left factor: out[ia*db+ib, ja*db+jb] = a[ia,ja]*b[ib,jb]."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace_a(rho: np.ndarray) -> np.ndarray:
    """Trace out the first qutrit of a 9x9 two-qutrit operator."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (9, 9):
        raise ValueError(f"partial_trace_a expects a 9x9 matrix, got shape {rho.shape}")
    return rho.reshape(3, 3, 3, 3).trace(axis1=0, axis2=2)


def partial_transpose_a(rho: np.ndarray) -> np.ndarray:
    """Transpose the first-qutrit indices of a 9x9 operator: out[3i+k,3j+l] = rho[3j+k,3i+l]."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (9, 9):
        raise ValueError(f"partial_transpose_a expects a 9x9 matrix, got shape {rho.shape}")
    return rho.reshape(3, 3, 3, 3).transpose(2, 1, 0, 3).reshape(9, 9)


class EigenDecomposition(NamedTuple):
    """Real eigenvalues in descending order, paired orthonormal column eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray


def eig_hermitian(m: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    The input is symmetrized before decomposition so that the solver always
    sees an exactly Hermitian operator.
    """
    m = require_hermitian(m)
    values, vectors = np.linalg.eigh(m)
    return EigenDecomposition(values[::-1].copy(), vectors[:, ::-1].copy())


def trace_norm_hermitian(m: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    m = require_hermitian(m)
    return float(np.sum(np.abs(np.linalg.eigvalsh(m))))
