"""Chebyshev-Gauss-Lobatto collocation primitives.

Grids, dense differentiation matrices, and Clenshaw-Curtis quadrature
weights on [-1, 1].  Nodes are ordered descending, ``x_0 = +1`` down to
``x_{n-1} = -1``; every boundary-row convention downstream relies on
this ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "CollocationGrid",
    "DiffMatrix",
    "QuadratureWeights",
    "cheb_points",
    "cheb_diff",
    "diff_power",
    "clenshaw_curtis",
]


@dataclass(frozen=True, eq=False)
class CollocationGrid:
    """Gauss-Lobatto nodes ``x_j = cos(j pi / (n-1))``, descending."""

    n: int
    points: np.ndarray


@dataclass(frozen=True, eq=False)
class DiffMatrix:
    """Dense collocation differentiation matrix of the given derivative order."""

    order: int
    entries: np.ndarray
    grid: CollocationGrid


@dataclass(frozen=True, eq=False)
class QuadratureWeights:
    """Clenshaw-Curtis weights aligned with the descending grid."""

    weights: np.ndarray


def cheb_points(n: int) -> CollocationGrid:
    """Build the n-point Gauss-Lobatto grid on [-1, 1].

    Nodes are evaluated in the numerically symmetric form
    ``sin(pi (n-1-2j) / (2(n-1)))`` and the lower half is mirrored from
    the upper half, so ``x_j == -x_{n-1-j}`` holds exactly and the
    endpoints are exactly +-1.
    """
    if n < 2:
        raise ValueError(f"grid needs at least 2 points, got n={n}")
    half = np.sin(np.pi * (n - 1 - 2 * np.arange(n // 2)) / (2 * (n - 1)))
    x = np.empty(n)
    x[: n // 2] = half
    if n % 2:
        x[n // 2] = 0.0
    x[n - n // 2 :] = -half[::-1]
    return CollocationGrid(n=n, points=x)


def cheb_diff(grid: CollocationGrid) -> DiffMatrix:
    """First-derivative collocation matrix on the given grid.

    Off-diagonal entries follow the barycentric form
    ``(c_i / c_j) (-1)^(i+j) / (x_i - x_j)`` with endpoint weights
    ``c = (2, 1, ..., 1, 2)``.  Node differences are formed through the
    half-angle identity, with the lower half mirrored from the upper
    half so they stay accurate near the boundary; the diagonal is the
    negated off-diagonal row sum, which makes the matrix exact on
    constants by construction.
    """
    n = grid.n
    cs = np.ones(n)
    cs[0] = cs[-1] = 2.0
    cs *= (-1.0) ** np.arange(n)

    # dx[i, j] = x_i - x_j = 2 sin((t_i + t_j)/2) sin((t_j - t_i)/2), t = j pi/(n-1)
    half_th = (np.pi / (2 * (n - 1))) * np.arange(n)
    dx = 2.0 * np.sin(half_th[:, None] + half_th[None, :]) * np.sin(
        half_th[None, :] - half_th[:, None]
    )
    dx[n // 2 :, :] = -dx[: (n + 1) // 2, :][::-1, ::-1]
    np.fill_diagonal(dx, 1.0)

    d = np.outer(cs, 1.0 / cs) / dx
    np.fill_diagonal(d, 0.0)
    np.fill_diagonal(d, -d.sum(axis=1))
    return DiffMatrix(order=1, entries=d, grid=grid)


def diff_power(d: DiffMatrix, p: int) -> DiffMatrix:
    """Derivative matrix of order p as the p-th power of a first-order one."""
    if d.order != 1:
        raise ValueError(f"expected a first-order matrix, got order {d.order}")
    if p < 1:
        raise ValueError(f"derivative order must be >= 1, got {p}")
    return DiffMatrix(order=p, entries=np.linalg.matrix_power(d.entries, p), grid=d.grid)


def clenshaw_curtis(grid: CollocationGrid) -> QuadratureWeights:
    """Clenshaw-Curtis weights on the grid; exact for polynomial degree < n."""
    n = grid.n
    nseg = n - 1
    w = np.empty(n)
    interior = np.arange(1, nseg)
    theta = np.pi * interior / nseg
    v = np.ones(nseg - 1)
    if nseg % 2 == 0:
        w[0] = w[nseg] = 1.0 / (nseg**2 - 1)
        ks = np.arange(1, nseg // 2)
        if ks.size:
            v -= 2.0 * (
                np.cos(2.0 * np.outer(ks, theta)) / (4.0 * ks**2 - 1.0)[:, None]
            ).sum(axis=0)
        v -= np.cos(nseg * theta) / (nseg**2 - 1)
    else:
        w[0] = w[nseg] = 1.0 / nseg**2
        ks = np.arange(1, (nseg - 1) // 2 + 1)
        if ks.size:
            v -= 2.0 * (
                np.cos(2.0 * np.outer(ks, theta)) / (4.0 * ks**2 - 1.0)[:, None]
            ).sum(axis=0)
    w[interior] = 2.0 * v / nseg
    return QuadratureWeights(weights=w)
