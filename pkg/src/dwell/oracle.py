"""Three-point finite-difference eigensolver used as an independent cross-check.

Shares nothing with the oscillator-basis code: the potential is sampled on a
uniform grid over ``[-L, L]`` with Dirichlet ends and the tridiagonal problem is
handed to LAPACK's bisection/inverse-iteration routine.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import BoundaryLeakError, ContractError, SolverError
from .potential import EvenPolynomialPotential, evaluate_potential

LEAK_TOL = 1e-8
DEFAULT_L_CHOICES = (4.0, 5.0, 6.0, 8.0)


@dataclass(frozen=True)
class GridSpec:
    L: float
    n_points: int
    count: int

    def __post_init__(self):
        if not self.L > 0:
            raise ContractError(f"L must be positive, got {self.L}")
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise ContractError(f"n_points must be odd and >= 3, got {self.n_points}")
        if not 1 <= self.count <= self.n_points:
            raise ContractError(f"count must lie in 1..{self.n_points}, got {self.count}")

    @property
    def h(self) -> float:
        return 2.0 * self.L / (self.n_points + 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(-self.L, self.L, self.n_points + 2)[1:-1]

    def refined(self) -> "GridSpec":
        """Same box with half the step."""
        return GridSpec(self.L, 2 * self.n_points + 1, self.count)


@dataclass(frozen=True, eq=False)
class GridSolution:
    grid: GridSpec
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # shape (n_points, count)
    boundary_ratio: float


def fd_solve(p: EvenPolynomialPotential, g: GridSpec, check_leak: bool = True) -> GridSolution:
    h2 = g.h**2
    diag = 2.0 / h2 + evaluate_potential(p, g.x)
    off = np.full(g.n_points - 1, -1.0 / h2)
    try:
        w, v = scipy.linalg.eigh_tridiagonal(
            diag, off, select="i", select_range=(0, g.count - 1), lapack_driver="stemr"
        )
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise SolverError(f"tridiagonal eigensolver failed: {exc}") from exc
    if w.size != g.count:
        raise SolverError(f"requested {g.count} eigenvalues, solver returned {w.size}")
    edge = np.maximum(np.abs(v[0]), np.abs(v[-1]))
    ratio = float((edge / np.abs(v).max(axis=0)).max())
    if check_leak and ratio >= LEAK_TOL:
        raise BoundaryLeakError(
            f"eigenvector amplitude at the box edge is {ratio:.2e} of its peak; L={g.L} is too small"
        )
    return GridSolution(g, w, v, ratio)


def fd_spectrum(p: EvenPolynomialPotential, g: GridSpec) -> list:
    return fd_solve(p, g).eigenvalues.tolist()


def richardson(e_h, e_half) -> list:
    """Cancel the O(h^2) term: ``(4 e(h/2) - e(h)) / 3``."""
    e_h = np.asarray(e_h, dtype=float)
    e_half = np.asarray(e_half, dtype=float)
    if e_h.shape != e_half.shape:
        raise ContractError(f"length mismatch: {e_h.shape} vs {e_half.shape}")
    return ((4.0 * e_half - e_h) / 3.0).tolist()


def default_box(p: EvenPolynomialPotential, n_points: int, count: int, choices=DEFAULT_L_CHOICES) -> float:
    """Smallest half-width in ``choices`` whose states do not leak to the boundary."""
    for L in choices:
        try:
            fd_solve(p, GridSpec(L, n_points, count))
        except BoundaryLeakError:
            continue
        return L
    raise BoundaryLeakError(f"every box in {tuple(choices)} leaks for the lowest {count} states")


def extrapolated_spectrum(
    p: EvenPolynomialPotential, count: int = 6, n_points: int = 4001, L: float = None
) -> list:
    """Richardson-extrapolated lowest ``count`` levels from grids of step h and h/2."""
    if L is None:
        L = default_box(p, n_points, count)
    g = GridSpec(L, n_points, count)
    return richardson(fd_spectrum(p, g), fd_spectrum(p, g.refined()))


def parity_of(v: np.ndarray, tol: float = 1e-6) -> str:
    """Classify a grid vector on a symmetric grid as 'even' or 'odd' by reflecting it."""
    scale = np.abs(v).max()
    if np.abs(v - v[::-1]).max() <= tol * scale:
        return "even"
    if np.abs(v + v[::-1]).max() <= tol * scale:
        return "odd"
    raise SolverError("grid eigenvector has no definite parity")


def parity_resolved_spectrum(
    p: EvenPolynomialPotential, count: int = 8, n_points: int = 4001, L: float = None
) -> dict:
    """Extrapolated levels split by the reflection symmetry of their eigenvectors."""
    if L is None:
        L = default_box(p, n_points, count)
    g = GridSpec(L, n_points, count)
    coarse, fine = fd_solve(p, g), fd_solve(p, g.refined())
    split = {"even": ([], []), "odd": ([], [])}
    for k in range(count):
        pc = parity_of(coarse.eigenvectors[:, k])
        pf = parity_of(fine.eigenvectors[:, k])
        if pc != pf:
            raise SolverError(f"level {k} changes parity between grids")
        split[pc][0].append(coarse.eigenvalues[k])
        split[pc][1].append(fine.eigenvalues[k])
    return {par: richardson(c, f) for par, (c, f) in split.items()}
