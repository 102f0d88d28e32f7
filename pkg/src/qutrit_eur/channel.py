"""Amplitude-damping channel of a V-type three-level atom in a leaky cavity.

The atom has two excited levels, each dipole-coupled to a common ground
level, radiating into a zero-temperature reservoir with a Lorentzian
spectral density of width ``lam``. Cross coupling between the two decay
channels (spontaneously generated interference, SGI) is controlled by the
alignment parameter ``theta``: 0 for perpendicular dipole moments, +-1 for
parallel/antiparallel ones.

Diagonalizing the decay matrix yields two dressed branches with rates
gamma_plus and gamma_minus. Each branch carries a scalar decoherence
amplitude G(t) obeying

    G'' + lam*G' + (lam*gamma/2)*G = 0,  G(0) = 1, G'(0) = 0,

which is monotone for lam >> gamma (Markovian regime) and oscillatory for
lam < 2*gamma (strong-coupling, non-Markovian regime). The channel is the
three-operator Kraus map assembled from the two branch amplitudes.

Basis convention: computational index 0 and 1 are the two excited levels,
index 2 is the ground level. Rates are in units of the bare decay rate
gamma, times in units of 1/gamma.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .linalg import kron, require_density_matrix

Branch = Literal["plus", "minus"]

COMPLETENESS_ATOL = 1e-10
# below this fraction of lam, the branch splitting is treated as exactly
# critical and the analytic d -> 0 limit of G(t) is used
_CRITICAL_SPLIT_RTOL = 1e-12
# rate difference below which the dressed-basis mixing is degenerate
_DEGENERATE_Q = 1e-12

_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class ChannelParams:
    """Physical inputs: decay rates of the two excited levels, SGI alignment, spectral width."""

    gamma1: float
    gamma2: float
    theta: float
    lam: float

    def __post_init__(self):
        if not self.gamma1 > 0:
            raise ValueError(f"gamma1 must be positive, got {self.gamma1}")
        if not self.gamma2 > 0:
            raise ValueError(f"gamma2 must be positive, got {self.gamma2}")
        if not abs(self.theta) <= 1:
            raise ValueError(f"theta must lie in [-1, 1], got {self.theta}")
        if not self.lam > 0:
            raise ValueError(f"lam must be positive, got {self.lam}")


@dataclass(frozen=True)
class DerivedParams:
    """Dressed-branch rates and mixing amplitudes derived from ChannelParams.

    q is the splitting of the decay-matrix eigenvalues, gamma_plus/gamma_minus
    the branch rates (their sum equals gamma1 + gamma2), and (a, b) the
    orthonormal mixing amplitudes of the dressed basis (a**2 + b**2 = 1).
    """

    q: float
    gamma_plus: float
    gamma_minus: float
    a: float
    b: float


def derive_params(p: ChannelParams) -> DerivedParams:
    """Dressed rates gamma_+- = (gamma1 + gamma2 +- q)/2 with q set by the SGI cross coupling."""
    cross_sq = p.gamma1 * p.gamma2 * p.theta**2
    q = math.sqrt((p.gamma1 - p.gamma2) ** 2 + 4.0 * cross_sq)
    gamma_plus = (p.gamma1 + p.gamma2 + q) / 2.0
    gamma_minus = (p.gamma1 + p.gamma2 - q) / 2.0
    if q < _DEGENERATE_Q:
        # q -> 0 makes the mixing formulas 0/0; in this regime the two branch
        # amplitudes coincide, so the channel is independent of the choice as
        # long as a**2 + b**2 = 1
        a = b = _SQRT_HALF
    else:
        a = math.sqrt((q + p.gamma1 - p.gamma2) / (2.0 * q))
        b = math.sqrt((q - p.gamma1 + p.gamma2) / (2.0 * q))
    return DerivedParams(q=q, gamma_plus=gamma_plus, gamma_minus=gamma_minus, a=a, b=b)


def _branch_rate(p: ChannelParams, branch: Branch) -> float:
    d = derive_params(p)
    if branch == "plus":
        return d.gamma_plus
    if branch == "minus":
        return d.gamma_minus
    raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")


def _g_closed(lam: float, rate: float, t: float) -> float:
    """Closed-form branch amplitude G(t).

    Evaluated as a sum of two complex exponentials with nonpositive real
    exponents, which equals
    exp(-lam*t/2) * [cosh(d*t/2) + (lam/d)*sinh(d*t/2)],  d = sqrt(lam^2 - 2*lam*rate),
    but stays finite for large lam*t and handles imaginary d (the
    oscillatory strong-coupling regime) in the same code path.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    d = cmath.sqrt(lam * lam - 2.0 * lam * rate)
    if abs(d) < _CRITICAL_SPLIT_RTOL * lam:
        return math.exp(-lam * t / 2.0) * (1.0 + lam * t / 2.0)
    val = 0.5 * (
        (1.0 + lam / d) * cmath.exp((d - lam) * t / 2.0)
        + (1.0 - lam / d) * cmath.exp(-(d + lam) * t / 2.0)
    )
    assert abs(val.imag) <= 1e-12, f"branch amplitude not real: {val!r}"
    return val.real


def decoherence_factor(p: ChannelParams, branch: Branch, t: float) -> float:
    """Decoherence amplitude of one dressed decay branch at time t (in [-1, 1])."""
    return _g_closed(p.lam, _branch_rate(p, branch), t)


def decoherence_factor_ode(p: ChannelParams, branch: Branch, t: float) -> float:
    """Branch amplitude by fixed-step RK4 integration of its damped-oscillator equation.

    Independent numerical oracle for decoherence_factor. The step is
    h = min(0.01/lam, 0.01/rate, t/1000), small against every timescale of
    G'' + lam*G' + (lam*rate/2)*G = 0 with G(0) = 1, G'(0) = 0.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0:
        return 1.0
    lam = p.lam
    rate = _branch_rate(p, branch)
    h_max = min(0.01 / lam, 0.01 / rate if rate > 0 else math.inf, t / 1000.0)
    n = max(1, math.ceil(t / h_max))
    h = t / n
    c = 0.5 * lam * rate
    h2 = 0.5 * h
    h6 = h / 6.0
    g, v = 1.0, 0.0
    for _ in range(n):
        k1g = v
        k1v = -lam * v - c * g
        g2 = g + h2 * k1g
        v2 = v + h2 * k1v
        k2g = v2
        k2v = -lam * v2 - c * g2
        g3 = g + h2 * k2g
        v3 = v + h2 * k2v
        k3g = v3
        k3v = -lam * v3 - c * g3
        g4 = g + h * k3g
        v4 = v + h * k3v
        k4g = v4
        k4v = -lam * v4 - c * g4
        g += h6 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g)
        v += h6 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
    return g


@dataclass(frozen=True, eq=False)
class KrausSet:
    """The three Kraus operators of the damping channel at one fixed time."""

    k1: np.ndarray
    k2: np.ndarray
    k3: np.ndarray
    t: float

    def __post_init__(self):
        acc = sum(k.conj().T @ k for k in self.ops)
        dev = np.max(np.abs(acc - np.eye(3)))
        if dev > COMPLETENESS_ATOL:
            raise ValueError(f"Kraus completeness violated: max|sum K^dag K - I| = {dev:.3e}")

    @property
    def ops(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.k1, self.k2, self.k3)


def kraus_set(p: ChannelParams, t: float) -> KrausSet:
    """Kraus triple at time t.

    k1 damps and mixes the excited levels through both branch amplitudes and
    leaves the ground level alone; k2/k3 feed the decayed population of the
    plus/minus dressed branch into the ground level. Their last rows carry
    the mixing amplitudes (a, -b) and (b, a) themselves, which is what makes
    sum K^dag K = I hold exactly.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    d = derive_params(p)
    gp = _g_closed(p.lam, d.gamma_plus, t)
    gm = _g_closed(p.lam, d.gamma_minus, t)
    a, b = d.a, d.b
    off = (gm - gp) * a * b
    k1 = np.array(
        [
            [gp * a * a + gm * b * b, off, 0.0],
            [off, gp * b * b + gm * a * a, 0.0],
            [0.0, 0.0, 1.0],
        ],
        dtype=complex,
    )
    wp = math.sqrt(max(0.0, 1.0 - gp * gp))
    wm = math.sqrt(max(0.0, 1.0 - gm * gm))
    k2 = wp * np.array([[0, 0, 0], [0, 0, 0], [a, -b, 0]], dtype=complex)
    k3 = wm * np.array([[0, 0, 0], [0, 0, 0], [b, a, 0]], dtype=complex)
    return KrausSet(k1=k1, k2=k2, k3=k3, t=t)


def apply_channel(rho: np.ndarray, ks: KrausSet) -> np.ndarray:
    """Evolve a single-qutrit density matrix: rho -> sum_i K_i rho K_i^dagger."""
    rho = require_density_matrix(rho)
    if rho.shape != (3, 3):
        raise ValueError(f"apply_channel expects a 3x3 state, got shape {rho.shape}")
    out = np.zeros((3, 3), dtype=complex)
    for k in ks.ops:
        out += k @ rho @ k.conj().T
    return out


def apply_product_channel(rho_ab: np.ndarray, ks: KrausSet) -> np.ndarray:
    """Evolve a two-qutrit state with the same local channel on each side.

    Both qutrits couple to independent, identical reservoirs, so the joint
    map is the nine-term sum over K_i (x) K_j.
    """
    rho_ab = require_density_matrix(rho_ab, name="rho_ab")
    if rho_ab.shape != (9, 9):
        raise ValueError(f"apply_product_channel expects a 9x9 state, got shape {rho_ab.shape}")
    out = np.zeros((9, 9), dtype=complex)
    for ki in ks.ops:
        for kj in ks.ops:
            kij = kron(ki, kj)
            out += kij @ rho_ab @ kij.conj().T
    return out
