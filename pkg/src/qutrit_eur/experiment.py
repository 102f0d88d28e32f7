"""Sweep engine, figure presets, CSV emission, and self-check suites.

A sweep evolves one isotropic initial state through the product damping
channel on a uniform time grid and records both sides of the uncertainty
relation, the negativity, and the two branch amplitudes at every sample.

The fig2*/fig3*/fig4* presets pin the parameter sets behind the reference
curves this package reproduces. The printed spectral width of the
oscillatory reference curves is inconsistent with their printed period;
the presets therefore default to lam = 0.001 (the reading under which the
period comes out right) and `literal_lambda=True` runs the printed
lam = 1000 instead. Which reading was used is recorded in the CSV header.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import __version__
from .channel import (
    ChannelParams,
    KrausSet,
    apply_channel,
    apply_product_channel,
    decoherence_factor,
    decoherence_factor_ode,
    kraus_set,
)
from .entropy import BERTA_ATOL, eur_sample
from .states_obs import isotropic_state, max_overlap_c, spin1_observable

BASIS_CONVENTIONS = ("kraus-order", "ground-first")
CSV_HEADER = "t_gamma,u_l,u_b,s_xb,s_zb,negativity,g_plus,g_minus"
EXTREMUM_DELTA = 1e-9
NEGATIVITY_ZERO_THRESHOLD = 1e-6

PRESET_NAMES = tuple(f"fig{fig}{panel}" for fig in (2, 3, 4) for panel in "abcd")
_PANEL_K = {"a": 0.0, "b": 0.4, "c": 0.6, "d": 1.0}
_FIG4_LAMBDA = {"a": 1.0, "b": 0.1, "c": 0.01, "d": 0.001}
_PRESET_T_MAX = 600.0
_PRESET_STEPS = 4800

# reindexing from (excited, excited, ground) to (ground, excited, excited)
_GROUND_FIRST_PERM = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=float)


@dataclass(frozen=True)
class SweepConfig:
    """Channel parameters plus initial-state mixing, time grid, and basis convention."""

    channel: ChannelParams
    k: float
    t_max: float
    steps: int
    basis: str = "kraus-order"

    def __post_init__(self):
        if not 0.0 <= self.k <= 1.0:
            raise ValueError(f"k must lie in [0, 1], got {self.k}")
        if not self.t_max > 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.steps < 2:
            raise ValueError(f"steps must be at least 2, got {self.steps}")
        if self.basis not in BASIS_CONVENTIONS:
            raise ValueError(
                f"basis must be one of {BASIS_CONVENTIONS}, got {self.basis!r}"
            )


@dataclass(frozen=True)
class SweepRecord:
    """One time sample of the uncertainty and entanglement observables."""

    t_gamma: float
    u_l: float
    u_b: float
    s_xb: float
    s_zb: float
    negativity: float
    g_plus: float
    g_minus: float


@dataclass(frozen=True)
class SweepSummary:
    """Grid extrema, negativity zero crossings, and the oscillation period estimate."""

    u_l_max: float
    t_u_l_max: float
    u_l_min: float
    t_u_l_min: float
    negativity_zeros: tuple[float, ...]
    period_estimate: float | None

    def __post_init__(self):
        if self.u_l_max < self.u_l_min:
            raise ValueError("u_l_max below u_l_min")


def _permuted(ks: KrausSet) -> KrausSet:
    p = _GROUND_FIRST_PERM
    return KrausSet(
        k1=p @ ks.k1 @ p.T, k2=p @ ks.k2 @ p.T, k3=p @ ks.k3 @ p.T, t=ks.t
    )


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Evaluate the uncertainty relation on the uniform grid t_i = i*t_max/(steps-1)."""
    rho0 = isotropic_state(cfg.k)
    c = max_overlap_c(spin1_observable("x"), spin1_observable("z"))
    records = []
    for i in range(cfg.steps):
        t = i * cfg.t_max / (cfg.steps - 1)
        ks = kraus_set(cfg.channel, t)
        if cfg.basis == "ground-first":
            ks = _permuted(ks)
        sample = eur_sample(apply_product_channel(rho0, ks), c)
        records.append(
            SweepRecord(
                t_gamma=t,
                u_l=sample.u_l,
                u_b=sample.u_b,
                s_xb=sample.s_xb,
                s_zb=sample.s_zb,
                negativity=sample.negativity,
                g_plus=decoherence_factor(cfg.channel, "plus", t),
                g_minus=decoherence_factor(cfg.channel, "minus", t),
            )
        )
    return records


def local_minima_indices(values, delta: float = EXTREMUM_DELTA) -> list[int]:
    """Interior indices dipping at least delta below both neighbours.

    The dead band rejects the 1e-16-level round-off ripple of fully decayed
    flat stretches while keeping every physically resolved dip.
    """
    v = np.asarray(values, dtype=float)
    return [
        i
        for i in range(1, len(v) - 1)
        if v[i] < v[i - 1] - delta and v[i] < v[i + 1] - delta
    ]


def local_maxima_indices(values, delta: float = EXTREMUM_DELTA) -> list[int]:
    """Interior indices rising at least delta above both neighbours."""
    v = np.asarray(values, dtype=float)
    return [
        i
        for i in range(1, len(v) - 1)
        if v[i] > v[i - 1] + delta and v[i] > v[i + 1] + delta
    ]


def summarize(records: list[SweepRecord]) -> SweepSummary:
    """Extrema, negativity zero crossings, and period estimate over a sweep.

    Zero crossings are the linearly interpolated times where the negativity
    crosses the 1e-6 threshold between consecutive samples. The period is
    the mean spacing of successive interior local minima of the uncertainty
    sum, absent when fewer than two minima exist.
    """
    if len(records) < 2:
        raise ValueError(f"summarize needs at least 2 records, got {len(records)}")
    ts = np.array([r.t_gamma for r in records])
    u_l = np.array([r.u_l for r in records])
    neg = np.array([r.negativity for r in records])

    i_max = int(np.argmax(u_l))
    i_min = int(np.argmin(u_l))

    zeros = []
    shifted = neg - NEGATIVITY_ZERO_THRESHOLD
    for i in range(len(records) - 1):
        if shifted[i] * shifted[i + 1] < 0:
            frac = shifted[i] / (shifted[i] - shifted[i + 1])
            zeros.append(float(ts[i] + frac * (ts[i + 1] - ts[i])))

    minima = local_minima_indices(u_l)
    period = float(np.mean(np.diff(ts[minima]))) if len(minima) >= 2 else None

    return SweepSummary(
        u_l_max=float(u_l[i_max]),
        t_u_l_max=float(ts[i_max]),
        u_l_min=float(u_l[i_min]),
        t_u_l_min=float(ts[i_min]),
        negativity_zeros=tuple(zeros),
        period_estimate=period,
    )


def figure_preset(name: str, literal_lambda: bool = False) -> SweepConfig:
    """Parameter set behind one reference panel.

    fig2a-d: no SGI, k = 0/0.4/0.6/1. fig3a-d: maximal SGI, same k ladder.
    fig4a-d: maximally entangled input, no SGI, lam = 1/0.1/0.01/0.001.
    literal_lambda switches fig2*/fig3* to the printed lam = 1000 instead of
    the period-consistent lam = 0.001; fig4 widths are per-panel already.
    """
    if name not in PRESET_NAMES:
        raise ValueError(
            f"unknown preset {name!r}; valid names: {', '.join(PRESET_NAMES)}"
        )
    fig, panel = name[3], name[4]
    if fig == "4":
        k, theta, lam = 1.0, 0.0, _FIG4_LAMBDA[panel]
    else:
        k = _PANEL_K[panel]
        theta = 0.0 if fig == "2" else 1.0
        lam = 1000.0 if literal_lambda else 0.001
    return SweepConfig(
        channel=ChannelParams(gamma1=1.0, gamma2=1.0, theta=theta, lam=lam),
        k=k,
        t_max=_PRESET_T_MAX,
        steps=_PRESET_STEPS,
    )


def canonical_params(cfg: SweepConfig) -> str:
    """Deterministic one-line rendering of a sweep configuration."""
    ch = cfg.channel
    return (
        f"gamma1={ch.gamma1:.12g} gamma2={ch.gamma2:.12g} theta={ch.theta:.12g} "
        f"lambda={ch.lam:.12g} k={cfg.k:.12g} t_max={cfg.t_max:.12g} "
        f"steps={cfg.steps} basis={cfg.basis}"
    )


def emit_csv(records: list[SweepRecord], destination, cfg: SweepConfig, note: str = "") -> None:
    """Write records as CSV with a provenance comment line.

    Values carry 12 significant digits, enough to reparse them within
    1e-11 relative.
    """
    comment = f"# qutrit-eur {__version__} params: {canonical_params(cfg)}"
    if note:
        comment += f" {note}"
    lines = [comment, CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                f"{v:.12g}"
                for v in (
                    r.t_gamma, r.u_l, r.u_b, r.s_xb, r.s_zb,
                    r.negativity, r.g_plus, r.g_minus,
                )
            )
        )
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"failed to write sweep CSV to {destination}: {exc}") from exc


def write_summary(summary: SweepSummary, destination) -> None:
    """Write the human-readable sweep summary next to the CSV."""
    period = "none" if summary.period_estimate is None else f"{summary.period_estimate:.12g}"
    zeros = (
        ", ".join(f"{z:.12g}" for z in summary.negativity_zeros)
        if summary.negativity_zeros
        else "none"
    )
    lines = [
        f"u_l_max = {summary.u_l_max:.12g} at t_gamma = {summary.t_u_l_max:.12g}",
        f"u_l_min = {summary.u_l_min:.12g} at t_gamma = {summary.t_u_l_min:.12g}",
        f"period_estimate = {period}",
        f"negativity_zeros = {zeros}",
    ]
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"failed to write summary to {destination}: {exc}") from exc


# ---------------------------------------------------------------------------
# self-check suites (also behind the `qutrit-eur check` command)
# ---------------------------------------------------------------------------


def _random_density_matrix(rng: np.random.Generator, dim: int) -> np.ndarray:
    x = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = x @ x.conj().T
    return rho / np.trace(rho).real


def _random_channel_params(rng: np.random.Generator) -> ChannelParams:
    return ChannelParams(
        gamma1=rng.uniform(0.1, 3.0),
        gamma2=rng.uniform(0.1, 3.0),
        theta=rng.uniform(-1.0, 1.0),
        lam=10.0 ** rng.uniform(-3.0, 3.0),
    )


def check_cptp(n_draws: int = 1000, seed: int = 20240811) -> tuple[bool, str]:
    """Completeness and state validity of the channel over random parameter draws."""
    rng = np.random.default_rng(seed)
    worst_complete = 0.0
    worst_trace = 0.0
    worst_eig = 0.0
    for _ in range(n_draws):
        params = _random_channel_params(rng)
        t = rng.uniform(0.0, 20.0)
        ks = kraus_set(params, t)
        acc = sum(k.conj().T @ k for k in ks.ops)
        worst_complete = max(worst_complete, float(np.max(np.abs(acc - np.eye(3)))))
        out = apply_channel(_random_density_matrix(rng, 3), ks)
        worst_trace = max(worst_trace, abs(float(np.trace(out).real) - 1.0))
        worst_eig = max(worst_eig, -float(np.linalg.eigvalsh((out + out.conj().T) / 2)[0]))
    ok = worst_complete <= 1e-10 and worst_trace <= 1e-12 and worst_eig <= 1e-10
    detail = (
        f"{n_draws} draws: completeness {worst_complete:.2e}, "
        f"trace drift {worst_trace:.2e}, eigenvalue dip {worst_eig:.2e}"
    )
    return ok, detail


def oracle_grid(n_points: int = 100) -> list[tuple[ChannelParams, str, float]]:
    """Deterministic (params, branch, t) grid spanning monotone and oscillatory regimes.

    Times are capped so that lam*t <= 50 and rate*t <= 20, keeping the
    fixed-step integration cheap while covering both real and imaginary
    branch splittings.
    """
    lams = np.logspace(-3.0, 3.0, 10)
    thetas = (0.0, 0.5, 1.0)
    gammas = ((1.0, 1.0), (2.0, 1.0), (0.5, 1.5))
    points = []
    i = 0
    for lam in lams:
        for j in range(math.ceil(n_points / len(lams))):
            if len(points) >= n_points:
                break
            g1, g2 = gammas[i % len(gammas)]
            params = ChannelParams(gamma1=g1, gamma2=g2, theta=thetas[i % len(thetas)], lam=lam)
            branch = "plus" if i % 2 == 0 else "minus"
            t_cap = min(20.0, 50.0 / lam)
            t = t_cap * (j + 1) / math.ceil(n_points / len(lams))
            points.append((params, branch, t))
            i += 1
    return points


def check_oracle(n_points: int = 100) -> tuple[bool, str]:
    """Agreement of the closed-form branch amplitude with its RK4 oracle."""
    worst = 0.0
    for params, branch, t in oracle_grid(n_points):
        closed = decoherence_factor(params, branch, t)
        integrated = decoherence_factor_ode(params, branch, t)
        worst = max(worst, abs(closed - integrated))
    ok = worst <= 1e-8
    return ok, f"{n_points} grid points: worst |closed - integrated| = {worst:.2e}"


def check_uncertainty_inequality(n_draws: int = 1000, seed: int = 20240812) -> tuple[bool, str]:
    """Lower-bound inequality on randomly evolved isotropic states."""
    rng = np.random.default_rng(seed)
    c = max_overlap_c(spin1_observable("x"), spin1_observable("z"))
    worst_margin = math.inf
    worst_split = 0.0
    for _ in range(n_draws):
        params = _random_channel_params(rng)
        cfg_k = rng.uniform(0.0, 1.0)
        t = rng.uniform(0.0, 300.0)
        rho = apply_product_channel(isotropic_state(cfg_k), kraus_set(params, t))
        sample = eur_sample(rho, c)
        worst_margin = min(worst_margin, sample.u_l - sample.u_b)
        worst_split = max(worst_split, abs(sample.u_l - (sample.s_xb + sample.s_zb)))
    ok = worst_margin >= -BERTA_ATOL and worst_split <= 1e-12
    detail = (
        f"{n_draws} draws: worst bound margin {worst_margin:.2e}, "
        f"worst term-sum split {worst_split:.2e}"
    )
    return ok, detail


def run_self_check(verbose: bool = True) -> bool:
    """Run the CPTP, oracle, and inequality suites; print one line per suite."""
    t0 = time.perf_counter()
    results = [
        ("cptp", *check_cptp()),
        ("oracle", *check_oracle()),
        ("inequality", *check_uncertainty_inequality()),
    ]
    all_ok = all(ok for _, ok, _ in results)
    if verbose:
        for name, ok, detail in results:
            print(f"  [{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        print(f"self-check {'passed' if all_ok else 'FAILED'} in {time.perf_counter() - t0:.1f}s")
    return all_ok
