"""Two-qutrit initial states, spin-1 observables, and projective measurement.

The isotropic family interpolates between the maximally mixed state (k=0)
and the maximally entangled pure state (k=1). Measurements act on
subsystem A, the left tensor factor; the memory qutrit B is untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import eig_hermitian, kron, require_density_matrix

_SQRT_HALF = 1.0 / np.sqrt(2.0)
_EIGENGAP_MIN = 1e-8
_PHASE_EPS = 1e-8

_I3 = np.eye(3, dtype=complex)


def _psi_plus() -> np.ndarray:
    """The maximally entangled two-qutrit ket (|00> + |11> + |22>)/sqrt(3)."""
    psi = np.zeros(9, dtype=complex)
    psi[[0, 4, 8]] = 1.0 / np.sqrt(3.0)
    return psi


def isotropic_state(k: float) -> np.ndarray:
    """Isotropic two-qutrit state (1-k)/9 * I + k |psi+><psi+|."""
    if not 0.0 <= k <= 1.0:
        raise ValueError(f"k must lie in [0, 1], got {k}")
    psi = _psi_plus()
    return (1.0 - k) / 9.0 * np.eye(9, dtype=complex) + k * np.outer(psi, psi.conj())


@dataclass(frozen=True, eq=False)
class Observable:
    """Hermitian operator with nondegenerate spectrum and phase-fixed eigenbasis.

    eigenvalues are descending; eigenbasis columns are the matching unit
    eigenvectors, each scaled so its first nonvanishing component is real
    and positive.
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenbasis: np.ndarray


def _fix_phase(v: np.ndarray) -> np.ndarray:
    for c in v:
        if abs(c) > _PHASE_EPS:
            return v * (c.conjugate() / abs(c))
    raise ValueError("cannot phase-fix a zero vector")


def observable_from_matrix(m: np.ndarray) -> Observable:
    """Build an Observable from a Hermitian matrix, rejecting degenerate spectra."""
    values, vectors = eig_hermitian(m)
    if np.min(np.abs(np.diff(values))) < _EIGENGAP_MIN:
        raise ValueError(f"observable is degenerate: eigenvalues {values}")
    basis = np.column_stack([_fix_phase(vectors[:, i]) for i in range(vectors.shape[1])])
    return Observable(matrix=np.asarray(m, dtype=complex), eigenvalues=values, eigenbasis=basis)


@lru_cache(maxsize=None)
def spin1_observable(axis: str) -> Observable:
    """Standard spin-1 axis operator (hbar = 1) with its eigenbasis.

    S_z = diag(1, 0, -1); S_x couples neighbouring m-levels with 1/sqrt(2).
    Both have the nondegenerate spectrum (1, 0, -1).
    """
    if axis == "z":
        m = np.diag([1.0, 0.0, -1.0]).astype(complex)
    elif axis == "x":
        m = _SQRT_HALF * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
    else:
        raise ValueError(f"axis must be 'x' or 'z', got {axis!r}")
    return observable_from_matrix(m)


def max_overlap_c(r: Observable, q: Observable) -> float:
    """Maximum squared overlap between the two eigenbases, max_ij |<r_i|s_j>|^2."""
    overlaps = r.eigenbasis.conj().T @ q.eigenbasis
    return float(np.max(np.abs(overlaps) ** 2))


def measure_post_state(rho_ab: np.ndarray, obs: Observable) -> np.ndarray:
    """Dephase subsystem A of a two-qutrit state in the observable's eigenbasis.

    Returns sum_i (P_i (x) I) rho (P_i (x) I) over the rank-1 eigenprojectors
    P_i. The B marginal is unchanged; the map is trace preserving and
    idempotent.
    """
    rho_ab = require_density_matrix(rho_ab, name="rho_ab")
    if rho_ab.shape != (9, 9):
        raise ValueError(f"measure_post_state expects a 9x9 state, got shape {rho_ab.shape}")
    out = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        v = obs.eigenbasis[:, i]
        proj = kron(np.outer(v, v.conj()), _I3)
        out += proj @ rho_ab @ proj
    return out
