"""Von Neumann entropy, memory-assisted uncertainty, and negativity.

All entropies are in bits. The uncertainty game measures the spin-1 x and
z components of qutrit A while qutrit B serves as quantum memory: the
measured uncertainty S(Sx|B) + S(Sz|B) is bounded below by
log2(1/c) + S(A|B), where c is the maximum squared overlap between the
two measurement eigenbases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import (
    EIGENVALUE_FLOOR,
    TRACE_ATOL,
    partial_trace_a,
    partial_transpose_a,
    require_density_matrix,
    require_hermitian,
    trace_norm_hermitian,
)
from .states_obs import measure_post_state, spin1_observable

BERTA_ATOL = 1e-9
_NEGATIVITY_FLOOR = -1e-12


def vn_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy -sum(w * log2(w)) in bits, with 0*log(0) = 0.

    Eigenvalues in [-1e-10, 0) are round-off from channel application and
    are clamped to zero; anything more negative is rejected.
    """
    rho = require_hermitian(rho, name="rho")
    w = np.linalg.eigvalsh(rho)
    if w[0] < EIGENVALUE_FLOOR:
        raise ValueError(f"rho has negative eigenvalue {w[0]:.3e}; not a state")
    if abs(float(np.sum(w)) - 1.0) > TRACE_ATOL:
        raise ValueError(f"rho must have unit trace, got {float(np.sum(w))!r}")
    w = w[w > 0.0]
    return float(-np.sum(w * np.log2(w)))


def conditional_entropy(rho_ab: np.ndarray) -> float:
    """S(A|B) = S(rho_AB) - S(rho_B); negative values certify entanglement."""
    return vn_entropy(rho_ab) - vn_entropy(partial_trace_a(rho_ab))


class UncertaintyParts(NamedTuple):
    """Measured uncertainty sum and its two conditional-entropy terms."""

    u_l: float
    s_xb: float
    s_zb: float


def eur_left(rho_ab: np.ndarray) -> UncertaintyParts:
    """Left side of the uncertainty relation: S(Sx|B) + S(Sz|B).

    Each term is the conditional entropy of the post-measurement state;
    the B marginal is measurement invariant, so S(rho_B) is computed once
    from the input.
    """
    s_b = vn_entropy(partial_trace_a(rho_ab))
    s_xb = vn_entropy(measure_post_state(rho_ab, spin1_observable("x"))) - s_b
    s_zb = vn_entropy(measure_post_state(rho_ab, spin1_observable("z"))) - s_b
    return UncertaintyParts(u_l=s_xb + s_zb, s_xb=s_xb, s_zb=s_zb)


def eur_right(rho_ab: np.ndarray, c: float) -> float:
    """Memory-assisted lower bound log2(1/c) + S(A|B)."""
    if not 0.0 < c <= 1.0:
        raise ValueError(f"c must lie in (0, 1], got {c}")
    return float(np.log2(1.0 / c)) + conditional_entropy(rho_ab)


def negativity(rho_ab: np.ndarray) -> float:
    """Entanglement negativity (||rho^T_A||_1 - 1) / 2, clamped at zero.

    The trace norm of the partial transpose is >= 1 for every state, so any
    dip below -1e-12 signals a broken input rather than round-off.
    """
    rho_ab = require_density_matrix(rho_ab, name="rho_ab")
    raw = (trace_norm_hermitian(partial_transpose_a(rho_ab)) - 1.0) / 2.0
    if raw < _NEGATIVITY_FLOOR:
        raise ValueError(f"negativity {raw:.3e} below round-off floor; invalid state")
    return max(0.0, raw)


@dataclass(frozen=True)
class EurSample:
    """One evaluation of the uncertainty relation on a two-qutrit state."""

    u_l: float
    u_b: float
    s_xb: float
    s_zb: float
    negativity: float

    def __post_init__(self):
        if self.u_l < self.u_b - BERTA_ATOL:
            raise ValueError(
                f"uncertainty sum {self.u_l!r} below its lower bound {self.u_b!r}"
            )


def eur_sample(rho_ab: np.ndarray, c: float) -> EurSample:
    """Evaluate both sides of the uncertainty relation plus negativity."""
    parts = eur_left(rho_ab)
    return EurSample(
        u_l=parts.u_l,
        u_b=eur_right(rho_ab, c),
        s_xb=parts.s_xb,
        s_zb=parts.s_zb,
        negativity=negativity(rho_ab),
    )
