"""Shared fixtures and random-matrix helpers."""

import time

import numpy as np
import pytest

from qutrit_eur.experiment import PRESET_NAMES, figure_preset, run_sweep


def random_hermitian(rng, dim):
    x = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (x + x.conj().T) / 2


def random_density_matrix(rng, dim):
    x = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = x @ x.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim):
    x = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(x)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


@pytest.fixture(scope="session")
def preset_sweeps():
    """All twelve preset sweeps, computed once, with the total wall time."""
    t0 = time.perf_counter()
    sweeps = {name: run_sweep(figure_preset(name)) for name in PRESET_NAMES}
    elapsed = time.perf_counter() - t0
    return sweeps, elapsed
