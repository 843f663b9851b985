"""Even polynomial potentials and their exponential ground-state ansatz.

A potential of order ``K`` is ``V(x) = sum_{j=0}^{2K-1} A_{2j} x^{2j}``.  When the
coefficients satisfy the quasi-exact-solvability (QES) constraints there is a
polynomial ``F(x) = sum_{j=0}^{K} F_j x^{2j}`` with ``F_K > 0`` such that
``psi0 = exp(-F)`` is an exact eigenfunction and ``F'^2 - F'' = V - E0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np
from numpy.polynomial import Polynomial

from .errors import ContractError

QES_TOL = 1e-12


def _coerce_coefficients(values, n_terms: int, what: str) -> tuple:
    """Accept a sequence ordered by j or a mapping keyed by the even degree 2j."""
    if isinstance(values, Mapping):
        out = [0.0] * n_terms
        for deg, val in values.items():
            deg = int(deg)
            if deg % 2 or deg < 0 or deg // 2 >= n_terms:
                raise ContractError(f"{what}: degree {deg} outside 0..{2 * (n_terms - 1)} (even only)")
            out[deg // 2] = float(val)
        return tuple(out)
    values = [float(v) for v in values]
    if len(values) > n_terms:
        raise ContractError(f"{what}: expected at most {n_terms} coefficients, got {len(values)}")
    return tuple(values + [0.0] * (n_terms - len(values)))


@dataclass(frozen=True)
class EvenPolynomialPotential:
    """``V(x) = sum_j A[j] x^(2j)`` for ``j = 0 .. 2K-1``.

    ``A`` may be given as a sequence ``(A_0, A_2, A_4, ...)`` or as a mapping from
    the even degree to the coefficient; missing entries are zero.
    """

    K: int
    A: tuple

    def __post_init__(self):
        if int(self.K) != self.K or self.K < 1:
            raise ContractError(f"K must be a positive integer, got {self.K!r}")
        object.__setattr__(self, "K", int(self.K))
        object.__setattr__(self, "A", _coerce_coefficients(self.A, 2 * self.K, "potential"))
        if not self.A[-1] > 0.0:
            raise ContractError(
                f"leading coefficient A_{2 * (2 * self.K - 1)} must be positive, got {self.A[-1]}"
            )

    @classmethod
    def from_coefficients(cls, A: Sequence[float]) -> "EvenPolynomialPotential":
        """Infer ``K`` from the number of coefficients (which must be even)."""
        if len(A) % 2:
            raise ContractError(f"need an even number of coefficients, got {len(A)}")
        return cls(len(A) // 2, tuple(A))

    @property
    def degree(self) -> int:
        return 2 * (2 * self.K - 1)

    def as_degree_map(self) -> dict:
        return {2 * j: a for j, a in enumerate(self.A)}

    def __call__(self, x):
        return evaluate_potential(self, x)


@dataclass(frozen=True)
class ExponentAnsatz:
    """Coefficients of ``F(x)`` in ``psi0 = exp(-F)``; ``F[0]`` is the irrelevant normalization."""

    K: int
    F: tuple
    E0: float = 0.0

    def __post_init__(self):
        if int(self.K) != self.K or self.K < 1:
            raise ContractError(f"K must be a positive integer, got {self.K!r}")
        object.__setattr__(self, "K", int(self.K))
        object.__setattr__(self, "F", _coerce_coefficients(self.F, self.K + 1, "ansatz"))
        if not self.F[-1] > 0.0:
            raise ContractError(f"F_K must be positive for exp(-F) to be normalizable, got {self.F[-1]}")

    def exponent(self, x):
        x2 = np.asarray(x, dtype=float) ** 2
        return sum(f * x2**j for j, f in enumerate(self.F))

    def wavefunction(self, x):
        """Unnormalized ``exp(-F(x))``."""
        return np.exp(-self.exponent(x))


@dataclass(frozen=True)
class QesResiduals:
    """Constraint left-hand sides; ``scale*`` is the largest term magnitude in each sum."""

    r1: float
    r2: Optional[float] = None
    scale1: float = 1.0
    scale2: Optional[float] = None

    def is_zero(self, tol: float = QES_TOL) -> bool:
        """Zero up to ``tol`` times ``max(1, scale)``: absolute for O(1) coefficients."""
        ok = abs(self.r1) <= tol * max(1.0, self.scale1)
        if self.r2 is not None:
            ok = ok and abs(self.r2) <= tol * max(1.0, self.scale2 or 1.0)
        return ok


def evaluate_potential(p: EvenPolynomialPotential, x):
    x2 = np.asarray(x, dtype=float) ** 2
    acc = np.zeros_like(x2)
    for a in reversed(p.A):
        acc = acc * x2 + a
    return acc if acc.ndim else float(acc)


def qes_residuals(p: EvenPolynomialPotential) -> QesResiduals:
    """Left-hand sides of the QES constraints for ``K = 2`` and ``K = 3``."""
    if p.K == 2:
        _, a2, a4, a6 = p.A
        t1 = (4.0 * a2 * a6, -(a4**2), 12.0 * a6**1.5)
        return QesResiduals(sum(t1), scale1=max(map(abs, t1)))
    if p.K == 3:
        _, a2, a4, a6, a8, a10 = p.A
        t1 = (4.0 * a10 * a6 * a8, -40.0 * a10**2.5, -8.0 * a10**2 * a4, -(a8**3))
        t2 = (
            16.0 * a10**2 * a6**2,
            -64.0 * a10**3 * a2,
            -96.0 * a8 * a10**2.5,
            -8.0 * a10 * a6 * a8**2,
            a8**4,
        )
        return QesResiduals(sum(t1), sum(t2), max(map(abs, t1)), max(map(abs, t2)))
    raise ContractError(f"QES conditions are only available for K in (2, 3), got K={p.K}")


def _riccati_polynomial(F: Sequence[float]) -> Polynomial:
    """``F'^2 - F''`` as a polynomial in ``x``."""
    coef = np.zeros(2 * len(F) - 1)
    coef[::2] = F
    f = Polynomial(coef)
    fp = f.deriv()
    return fp * fp - fp.deriv()


def reference_potential(a: ExponentAnsatz, A0: float = 0.0):
    """Potential generated by ``exp(-F)`` with its constant term pinned to ``A0``.

    Returns ``(V, E0)`` with ``V - E0 = F'^2 - F''``.
    """
    q = _riccati_polynomial(a.F).coef
    n_terms = 2 * a.K
    even = np.zeros(n_terms)
    src = q[::2][:n_terms]
    even[: len(src)] = src
    c0 = even[0]
    even[0] = A0
    return EvenPolynomialPotential(a.K, tuple(even)), float(A0 - c0)


def _match_exponent(p: EvenPolynomialPotential) -> tuple:
    """Solve for ``F_1 .. F_K`` from the degrees ``2K .. 2(2K-1)`` of ``V``.

    Coefficient of ``x^{2m}`` in ``F'^2`` is ``sum_{i+j=m+1} 4 i j F_i F_j``; the
    lower degrees are where ``F''`` enters, so they become consistency conditions.
    """
    K = p.K
    F = [0.0] * (K + 1)
    F[K] = np.sqrt(p.A[2 * K - 1]) / (2 * K)
    for m in range(2 * K - 2, K - 1, -1):
        l = m + 1 - K
        known = 0.0
        for i in range(l + 1, K):
            j = m + 1 - i
            if l < j < K:
                known += 4.0 * i * j * F[i] * F[j]
        F[l] = (p.A[m] - known) / (8.0 * K * l * F[K])
    return tuple(F)


def solve_ansatz(p: EvenPolynomialPotential, tol: float = QES_TOL) -> Optional[ExponentAnsatz]:
    """Exact ground-state exponent of ``p``, or ``None`` if the QES constraints fail."""
    if not qes_residuals(p).is_zero(tol):
        return None
    F = _match_exponent(p)
    return ExponentAnsatz(p.K, F, float(p.A[0] + 2.0 * F[1]))
