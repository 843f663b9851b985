"""Parity-resolved Hamiltonian blocks and the trace-stationarity choice of omega."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .basis_ops import (
    BandedSymmetricMatrix,
    BasisSpec,
    Parity,
    kinetic_matrix,
    parity_restrict,
    position_matrix,
    power_matrix,
)
from .errors import BracketError, ContractError
from .potential import EvenPolynomialPotential

DEFAULT_BRACKET = (0.5, 20.0)


@dataclass(frozen=True, eq=False)
class AssembledBlock:
    potential: EvenPolynomialPotential
    spec: BasisSpec
    H: BandedSymmetricMatrix


def full_hamiltonian(p: EvenPolynomialPotential, omega: float, size: int) -> BandedSymmetricMatrix:
    """Leading ``size`` block of ``H`` on the unsplit basis."""
    kmax = 2 * (2 * p.K - 1)
    X = position_matrix(BasisSpec(omega, size + kmax))
    h = kinetic_matrix(BasisSpec(omega, size)).values.copy()
    if p.A[0]:
        h[np.diag_indices(size)] += p.A[0]
    for j, a in enumerate(p.A[1:], start=1):
        if a:
            h += a * power_matrix(X, 2 * j, size).values
    return BandedSymmetricMatrix(h, kmax)


def assemble(p: EvenPolynomialPotential, omega: float, N: int, parity) -> AssembledBlock:
    parity = Parity(parity)
    if parity is Parity.FULL:
        spec = BasisSpec(omega, N, parity)
        return AssembledBlock(p, spec, full_hamiltonian(p, omega, N))
    spec = BasisSpec(omega, N, parity)
    H = parity_restrict(full_hamiltonian(p, omega, 2 * N), parity, N)
    return AssembledBlock(p, spec, H)


def trace_head(p: EvenPolynomialPotential, omega: float, M: int) -> float:
    """``sum_{j=0}^{M} H_jj(omega)`` on the unsplit basis."""
    if M < 0:
        raise ContractError(f"M must be >= 0, got {M}")
    if not omega > 0:
        raise ContractError(f"omega must be positive, got {omega}")
    size = max(M + 1, 2)
    return float(np.trace(full_hamiltonian(p, omega, size).values[: M + 1, : M + 1]))


def trace_slope(p: EvenPolynomialPotential, omega: float, M: int) -> float:
    h = 1e-5 * omega
    return (trace_head(p, omega + h, M) - trace_head(p, omega - h, M)) / (2.0 * h)


def omega_star(p: EvenPolynomialPotential, M: int, bracket=DEFAULT_BRACKET) -> float:
    """Root of ``d/d omega`` of the trace head, located by bisection to 1e-8."""
    lo, hi = map(float, bracket)
    if not 0 < lo < hi:
        raise BracketError(f"bracket must satisfy 0 < lo < hi, got {bracket}")
    s_lo, s_hi = trace_slope(p, lo, M), trace_slope(p, hi, M)
    if s_lo == 0.0:
        return lo
    if s_hi == 0.0:
        return hi
    if np.sign(s_lo) == np.sign(s_hi):
        raise BracketError(
            f"trace slope has the same sign at omega={lo} ({s_lo:.3g}) and omega={hi} ({s_hi:.3g})"
        )
    return optimize.bisect(lambda w: trace_slope(p, w, M), lo, hi, xtol=1e-8, rtol=1e-15, maxiter=200)


def omega_select(p: EvenPolynomialPotential, M: int = 10, bracket=DEFAULT_BRACKET) -> int:
    """Integer frequency nearest the stationary point of the trace head (at least 1)."""
    return max(1, int(round(omega_star(p, M, bracket))))
