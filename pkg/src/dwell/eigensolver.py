"""Symmetric eigensolve of assembled blocks plus the variational contract checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from .basis_ops import Parity
from .errors import ContractError, SolverError
from .hamiltonian import AssembledBlock

RESIDUAL_TOL = 1e-10
ORTHO_TOL = 1e-10
INTERLACE_SLACK = 1e-10
BOUND_TOL = 1e-5


@dataclass(frozen=True, eq=False)
class EigenSolution:
    N: int
    parity: Parity
    omega: float
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column i belongs to eigenvalues[i]
    max_residual: float
    max_orthogonality_error: float = 0.0


def _refine(A: np.ndarray, X: np.ndarray):
    """One Ogita-Aishima refinement step carried out in extended precision.

    LAPACK's backward error scales with ``||H||``, which reaches ~1e7 for the
    ``x^10`` blocks; the low states need residuals relative to their own size.
    """
    A = A.astype(np.longdouble)
    X = X.astype(np.longdouble)
    n = A.shape[0]
    R = np.eye(n, dtype=np.longdouble) - X.T @ X
    S = X.T @ (A @ X)
    lam = np.diag(S) / (1 - np.diag(R))
    gap = lam[None, :] - lam[:, None]
    np.fill_diagonal(gap, 1)
    E = (S + lam[None, :] * R) / gap
    np.fill_diagonal(E, np.diag(R) / 2)
    X = X + X @ E
    return lam.astype(float), X.astype(float)


def _scaled_residuals(A: np.ndarray, lam: np.ndarray, X: np.ndarray) -> np.ndarray:
    Al = A.astype(np.longdouble)
    Xl = X.astype(np.longdouble)
    r = Al @ Xl - Xl * lam.astype(np.longdouble)
    return np.sqrt((r * r).sum(axis=0)).astype(float) / (1.0 + np.abs(lam))


def solve_matrix(
    H,
    *,
    parity=Parity.FULL,
    omega: float = float("nan"),
    refine: bool = True,
    check: bool = True,
) -> EigenSolution:
    """Eigen-decompose a symmetric matrix, refine, and enforce the solution contract."""
    A = np.asarray(H, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ContractError(f"expected a square matrix, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ContractError("matrix is not exactly symmetric")
    try:
        lam, X = scipy.linalg.eigh(A)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise SolverError(f"symmetric eigensolver failed: {exc}") from exc
    _check_simple(lam)
    if refine:
        lam, X = _refine(A, X)
        order = np.argsort(lam, kind="stable")
        lam, X = lam[order], X[:, order]
    if not np.all(np.isfinite(lam)):
        raise SolverError("non-finite eigenvalues")

    res = _scaled_residuals(A, lam, X)
    ortho = float(np.abs(X.T @ X - np.eye(A.shape[0])).max())
    sol = EigenSolution(
        N=A.shape[0],
        parity=Parity(parity),
        omega=float(omega),
        eigenvalues=lam,
        eigenvectors=X,
        max_residual=float(res.max()),
        max_orthogonality_error=ortho,
    )
    if check:
        _check_contract(sol)
    return sol


def _check_simple(lam: np.ndarray) -> None:
    if lam.size > 1:
        gaps = np.diff(lam)
        if np.any(gaps <= 0.0):
            i = int(np.argmin(gaps))
            raise SolverError(f"degenerate or unordered eigenvalues at index {i}: {lam[i]!r}, {lam[i + 1]!r}")


def _check_contract(sol: EigenSolution) -> None:
    _check_simple(sol.eigenvalues)
    if sol.max_residual > RESIDUAL_TOL:
        raise SolverError(f"eigenpair residual {sol.max_residual:.3g} exceeds {RESIDUAL_TOL:g}")
    if sol.max_orthogonality_error > ORTHO_TOL:
        raise SolverError(f"eigenvector orthonormality error {sol.max_orthogonality_error:.3g}")


def eigh(block: AssembledBlock, **kwargs) -> EigenSolution:
    return solve_matrix(block.H.values, parity=block.spec.parity, omega=block.spec.omega, **kwargs)


def interlace_check(prev: EigenSolution, curr: EigenSolution, slack: float = INTERLACE_SLACK) -> bool:
    """True when no level rises as the basis grows by one function."""
    if prev.N != curr.N - 1:
        raise ContractError(f"expected consecutive sizes, got {prev.N} and {curr.N}")
    if prev.parity != curr.parity:
        raise ContractError(f"parity mismatch: {prev.parity.value} vs {curr.parity.value}")
    same_omega = prev.omega == curr.omega or (np.isnan(prev.omega) and np.isnan(curr.omega))
    if not same_omega:
        raise ContractError(f"omega mismatch: {prev.omega} vs {curr.omega}")
    n = curr.N - 1
    return bool(np.all(curr.eigenvalues[:n] <= prev.eigenvalues[:n] + slack))


def cauchy_interlace(prev: EigenSolution, curr: EigenSolution, slack: float = INTERLACE_SLACK) -> bool:
    """Both halves of ``E_i[N+1] <= E_i[N] <= E_{i+1}[N+1]``."""
    if prev.N != curr.N - 1:
        raise ContractError(f"expected consecutive sizes, got {prev.N} and {curr.N}")
    a, b = prev.eigenvalues, curr.eigenvalues
    return bool(np.all(b[:-1] <= a + slack) and np.all(a <= b[1:] + slack))


def upper_bound_check(
    sol: EigenSolution, reference: Sequence[Optional[float]], tol: float = BOUND_TOL
) -> list:
    """Indices of reference values that lie below the computed level by more than ``tol``.

    A value below a converged variational eigenvalue cannot be an upper bound to the
    exact energy.  ``None`` entries are skipped.
    """
    out = []
    for i, ref in enumerate(reference):
        if ref is None or i >= sol.eigenvalues.size:
            continue
        if ref < sol.eigenvalues[i] - tol:
            out.append(i)
    return out
