"""Benchmark constrained systems and their analytic references.

Every builder assembles the raw collocation operators on the descending
Gauss-Lobatto grid and states the boundary conditions as constraint
rows; nothing is deleted or bordered into the matrices.  The registry
maps the public problem names used by the command line to builders,
parameter lists, and (where known) analytic spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.special import roots_legendre

from .chebyshev import CollocationGrid, cheb_diff, cheb_points, diff_power
from .constrained import ConstrainedSystem

__all__ = [
    "BenchmarkProblem",
    "REGISTRY",
    "get_problem",
    "split_state",
    "heat_dirichlet",
    "heat_reference",
    "canuto_hyperbolic",
    "canuto_reference",
    "orr_sommerfeld",
    "acoustic_wave",
    "acoustic_spectrum",
    "acoustic_reference",
    "bump_ic",
    "sine_ic",
]


def heat_dirichlet(n: int) -> ConstrainedSystem:
    """Diffusion on [-1, 1] with both endpoint values pinned to zero.

    Drift is the full second-derivative matrix; the two constraint rows
    sample the solution at x = +1 and x = -1.  The exact spectrum is
    ``-(m pi / 2)^2``.
    """
    if n < 4:
        raise ValueError(f"need at least 4 grid points, got n={n}")
    grid = cheb_points(n)
    a = diff_power(cheb_diff(grid), 2).entries
    c = np.zeros((2, n))
    c[0, 0] = 1.0
    c[1, n - 1] = 1.0
    labels = {"problem": "heat", "n": n, "fields": ("u",), "grid": grid}
    return ConstrainedSystem(a=a, c=c, labels=labels)


def heat_reference(count: int) -> np.ndarray:
    """First ``count`` analytic eigenvalues ``-(m pi / 2)^2`` of heat_dirichlet."""
    m = np.arange(1, count + 1)
    return (-((m * np.pi / 2.0) ** 2)).astype(complex)


def canuto_hyperbolic(n: int) -> ConstrainedSystem:
    """Coupled two-field advection system with an imaginary-ladder spectrum.

    State is (psi1, psi2) with each field sampled on the n-point grid,
    drift ``A = -[[1/2, 1], [1, 1/2]] (x) D``, and the first field
    pinned at both endpoints.  The analytic eigenvalues are
    ``i (3 pi / 8) k`` for integer k, so eigenvalues off the imaginary
    axis are discretization artifacts by construction.
    """
    if n < 4:
        raise ValueError(f"need at least 4 grid points per field, got n={n}")
    grid = cheb_points(n)
    d = cheb_diff(grid).entries
    a = -np.kron(np.array([[0.5, 1.0], [1.0, 0.5]]), d)
    c = np.zeros((2, 2 * n))
    c[0, n - 1] = 1.0  # psi1 at x = -1
    c[1, 0] = 1.0  # psi1 at x = +1
    labels = {"problem": "canuto", "n": n, "fields": ("psi1", "psi2"), "grid": grid}
    return ConstrainedSystem(a=a, c=c, labels=labels)


def canuto_reference(count: int) -> np.ndarray:
    """Imaginary ladder ``i (3 pi / 8) k`` for k = -count .. count."""
    k = np.arange(-count, count + 1)
    return 1j * (3.0 * np.pi / 8.0) * k


def orr_sommerfeld(n: int, alpha: float = 1.0, reynolds: float = 10000.0) -> ConstrainedSystem:
    """Wall-normal stability operator of plane Poiseuille flow.

    Stream-function form at streamwise wavenumber ``alpha`` and Reynolds
    number ``reynolds`` over the base profile ``1 - z^2``:

        E = alpha R (D^2 - alpha^2 I)
        A = D^4 + diag(-2 alpha^2 - i alpha R ubar) D^2
            + diag(alpha^4 + i alpha^3 R ubar - 2 i R alpha)

    with clamped walls: value and slope vanish at z = +1 and z = -1,
    stated as four constraint rows (rows of I and of D at both ends).
    """
    if n < 10:
        raise ValueError(f"need at least 10 grid points, got n={n}")
    if alpha <= 0 or reynolds <= 0:
        raise ValueError("alpha and reynolds must be positive")
    grid = cheb_points(n)
    d1 = cheb_diff(grid)
    d = d1.entries
    d2 = diff_power(d1, 2).entries
    d4 = diff_power(d1, 4).entries
    z = grid.points
    ubar = 1.0 - z**2

    e = (alpha * reynolds * (d2 - alpha**2 * np.eye(n))).astype(complex)
    a = (
        d4
        + np.diag(-2.0 * alpha**2 - 1j * alpha * reynolds * ubar) @ d2
        + np.diag(alpha**4 + 1j * alpha**3 * reynolds * ubar - 2j * reynolds * alpha)
    )
    c = np.zeros((4, n), dtype=complex)
    c[0, 0] = 1.0
    c[1, n - 1] = 1.0
    c[2] = d[0]
    c[3] = d[n - 1]
    labels = {
        "problem": "orr-sommerfeld",
        "n": n,
        "alpha": alpha,
        "reynolds": reynolds,
        "fields": ("psi",),
        "grid": grid,
    }
    return ConstrainedSystem(a=a, c=c, e=e, labels=labels)


def acoustic_wave(n: int) -> ConstrainedSystem:
    """Pressure-velocity form of the 1-D wave equation, pressure pinned.

    State is (p, u) with drift ``[[0, D], [D, 0]]`` and the two
    constraint rows sampling p at x = +1 and x = -1.  The spectrum is
    ``+-i m pi / 2`` plus one zero mode (p = 0, u constant).
    """
    if n < 4:
        raise ValueError(f"need at least 4 grid points per field, got n={n}")
    grid = cheb_points(n)
    d = cheb_diff(grid).entries
    zero = np.zeros((n, n))
    a = np.block([[zero, d], [d, zero]])
    c = np.zeros((2, 2 * n))
    c[0, 0] = 1.0
    c[1, n - 1] = 1.0
    labels = {"problem": "acoustic", "n": n, "fields": ("p", "u"), "grid": grid}
    return ConstrainedSystem(a=a, c=c, labels=labels)


def acoustic_spectrum(count: int) -> np.ndarray:
    """Ladder ``i (pi / 2) m`` for m = -count .. count, zero mode included."""
    m = np.arange(-count, count + 1)
    return 1j * (np.pi / 2.0) * m


def split_state(sys: ConstrainedSystem, z: np.ndarray) -> dict[str, np.ndarray]:
    """Split a flat state vector into the named fields of a builder's system."""
    fields = (sys.labels or {}).get("fields")
    if not fields:
        raise ValueError("system carries no field layout")
    per = sys.n // len(fields)
    return {name: z[i * per : (i + 1) * per] for i, name in enumerate(fields)}


def _bump_profile(x: np.ndarray) -> np.ndarray:
    # One-sided cutoff exactly as specified: the exponent vanishes
    # smoothly at x = +0.3 but jumps at x = -0.3.
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    mask = np.abs(x) < 0.3
    with np.errstate(divide="ignore"):
        t = 1.0 - x[mask] / 0.3
        out[mask] = np.exp(-1.0 / t**4)
    return out


def _sine_profile(x: np.ndarray) -> np.ndarray:
    return np.sin(-np.pi * np.asarray(x, dtype=float) + np.pi)


def bump_ic(grid: CollocationGrid) -> np.ndarray:
    """Compactly supported pressure pulse ``exp(-1/(1 - x/0.3)^4)`` on |x| < 0.3."""
    return _bump_profile(grid.points)


def sine_ic(grid: CollocationGrid) -> np.ndarray:
    """Single standing-wave pressure profile ``sin(-pi x + pi)``."""
    return _sine_profile(grid.points)


_IC_PROFILES: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "bump": _bump_profile,
    "sine": _sine_profile,
}


@lru_cache(maxsize=2)
def _gauss_rule(m: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = roots_legendre(m)
    return nodes, weights


def acoustic_reference(
    grid: CollocationGrid, ic: str, t: float, n_modes: int = 1500
) -> tuple[np.ndarray, np.ndarray]:
    """Modal-series solution of the pressure-pinned wave system on the grid.

    The initial pressure is projected onto the orthonormal standing
    waves ``sin(m pi (x+1)/2)`` with a dense Gauss-Legendre rule, kept
    independent of the collocation machinery on purpose, and each mode
    is evolved exactly at frequency ``m pi / 2``.  Velocity starts at
    rest, so pressure carries cosine and velocity sine time factors.
    """
    if ic not in _IC_PROFILES:
        raise ValueError(f"unknown initial condition {ic!r}; pick one of {sorted(_IC_PROFILES)}")
    if n_modes < 1:
        raise ValueError(f"need at least one mode, got n_modes={n_modes}")
    xq, wq = _gauss_rule(4096)
    p0 = _IC_PROFILES[ic](xq)
    m = np.arange(1, n_modes + 1)
    coeff = np.sin(np.outer(m, np.pi * (xq + 1.0) / 2.0)) @ (wq * p0)
    omega = m * np.pi / 2.0
    xg = grid.points
    p = (coeff * np.cos(omega * t)) @ np.sin(np.outer(m, np.pi * (xg + 1.0) / 2.0))
    u = (coeff * np.sin(omega * t)) @ np.cos(np.outer(m, np.pi * (xg + 1.0) / 2.0))
    return p, u


@dataclass(frozen=True)
class BenchmarkProblem:
    """Named builder plus an optional analytic spectrum generator.

    ``reference_cover(radius)`` returns every analytic eigenvalue out to
    at least the given modulus, with margin, so nearest-reference
    matching always has candidates beyond the computed spectrum.
    """

    name: str
    build: Callable[..., ConstrainedSystem]
    params: tuple[str, ...]
    reference_cover: Callable[[float], np.ndarray] | None = None


def _heat_cover(radius: float) -> np.ndarray:
    return heat_reference(int(np.ceil(2.0 * np.sqrt(max(radius, 0.0)) / np.pi)) + 2)


def _canuto_cover(radius: float) -> np.ndarray:
    return canuto_reference(int(np.ceil(radius / (3.0 * np.pi / 8.0))) + 2)


def _acoustic_cover(radius: float) -> np.ndarray:
    return acoustic_spectrum(int(np.ceil(radius / (np.pi / 2.0))) + 2)


REGISTRY: dict[str, BenchmarkProblem] = {
    "heat": BenchmarkProblem("heat", heat_dirichlet, ("n",), _heat_cover),
    "canuto": BenchmarkProblem("canuto", canuto_hyperbolic, ("n",), _canuto_cover),
    "orr-sommerfeld": BenchmarkProblem(
        "orr-sommerfeld", orr_sommerfeld, ("n", "alpha", "reynolds"), None
    ),
    "acoustic": BenchmarkProblem("acoustic", acoustic_wave, ("n",), _acoustic_cover),
}


def get_problem(name: str) -> BenchmarkProblem:
    """Look up a registered problem by its public name."""
    try:
        return REGISTRY[name]
    except KeyError:
        raise ValueError(
            f"unknown problem {name!r}; registered: {', '.join(REGISTRY)}"
        ) from None
