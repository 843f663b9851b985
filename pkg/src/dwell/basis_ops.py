"""Operator matrices in the harmonic-oscillator basis of ``-d^2/dx^2 + omega^2 x^2``.

Basis function ``n`` has energy ``(2n+1) omega`` and ``<x^2>_0 = 1/(2 omega)``.
Powers of ``x`` are formed by multiplying the exact tridiagonal position matrix
with enough guard rows that the retained block carries no truncation error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ContractError


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"
    FULL = "full"

    @property
    def offset(self) -> int:
        return {Parity.EVEN: 0, Parity.ODD: 1}[self]


@dataclass(frozen=True)
class BasisSpec:
    omega: float
    size: int
    parity: Parity = Parity.FULL

    def __post_init__(self):
        if not self.omega > 0:
            raise ContractError(f"omega must be positive, got {self.omega}")
        if int(self.size) != self.size or self.size < 1:
            raise ContractError(f"size must be a positive integer, got {self.size}")
        object.__setattr__(self, "size", int(self.size))
        object.__setattr__(self, "parity", Parity(self.parity))


@dataclass(frozen=True, eq=False)
class BandedSymmetricMatrix:
    """Dense storage of a symmetric matrix known to vanish outside a band."""

    values: np.ndarray
    half_bandwidth: int

    def __post_init__(self):
        a = np.array(self.values, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ContractError(f"expected a square matrix, got shape {a.shape}")
        # mirror the lower triangle so symmetry holds bit for bit
        a = np.tril(a) + np.tril(a, -1).T
        n = a.shape[0]
        i, j = np.indices((n, n))
        a[np.abs(i - j) > self.half_bandwidth] = 0.0
        a.setflags(write=False)
        object.__setattr__(self, "values", a)

    @property
    def order(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, idx):
        return self.values[idx]

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def leading(self, n: int) -> "BandedSymmetricMatrix":
        return BandedSymmetricMatrix(self.values[:n, :n], min(self.half_bandwidth, max(n - 1, 0)))

    def band(self, offset: int) -> np.ndarray:
        return np.diagonal(self.values, -offset).copy()


def _require_full(spec: BasisSpec) -> None:
    if spec.parity is not Parity.FULL:
        raise ContractError("operator matrices are built on the full basis; restrict parity afterwards")


def position_matrix(spec: BasisSpec) -> BandedSymmetricMatrix:
    _require_full(spec)
    if spec.size < 2:
        raise ContractError("position matrix needs at least two basis functions")
    n = np.arange(1, spec.size)
    off = np.sqrt(n / (2.0 * spec.omega))
    return BandedSymmetricMatrix(np.diag(off, -1) + np.diag(off, 1), 1)


def power_matrix(X: BandedSymmetricMatrix, k: int, size_guard: int) -> BandedSymmetricMatrix:
    """Leading ``size_guard`` block of ``X^k``, exact because ``X`` carries ``k`` guard rows."""
    if k < 1:
        raise ContractError(f"power must be >= 1, got {k}")
    if X.order < size_guard + k:
        raise ContractError(
            f"position matrix of order {X.order} is too small for block {size_guard} of x^{k}"
        )
    if X.half_bandwidth != 1 or np.any(np.diag(X.values) != 0.0):
        raise ContractError("power_matrix expects the tridiagonal, zero-diagonal position matrix")
    # a walk of length k starting in the block never climbs above size_guard + k/2
    n = min(X.order, size_guard + (k + 1) // 2)
    off = X.band(1)[: n - 1]
    out = X.values[:n, :n].copy()
    for _ in range(k - 1):
        # (P X)[:, j] = P[:, j-1] X[j-1, j] + P[:, j+1] X[j+1, j]; two terms, so the
        # result does not depend on n and nested truncations agree bit for bit
        nxt = np.zeros_like(out)
        nxt[:, 1:] = out[:, :-1] * off
        nxt[:, :-1] += out[:, 1:] * off
        out = nxt
    return BandedSymmetricMatrix(out[:size_guard, :size_guard], k)


def kinetic_matrix(spec: BasisSpec) -> BandedSymmetricMatrix:
    """``-d^2/dx^2 = H_HO - omega^2 x^2``: diagonal ``(2n+1) omega/2``, second band negative."""
    _require_full(spec)
    w = spec.omega
    n = np.arange(spec.size, dtype=float)
    m = np.zeros((spec.size, spec.size))
    m[np.diag_indices(spec.size)] = (2.0 * n + 1.0) * w / 2.0
    if spec.size > 2:
        k = n[:-2]
        m[np.arange(2, spec.size), np.arange(spec.size - 2)] = -w * np.sqrt((k + 1.0) * (k + 2.0)) / 2.0
    return BandedSymmetricMatrix(m, 2)


def parity_restrict(M: BandedSymmetricMatrix, parity, n_keep: int) -> BandedSymmetricMatrix:
    parity = Parity(parity)
    if parity is Parity.FULL:
        raise ContractError("parity_restrict needs 'even' or 'odd'")
    if M.order < 2 * n_keep:
        raise ContractError(f"matrix of order {M.order} cannot supply {n_keep} {parity.value} states")
    i, j = np.indices(M.values.shape)
    if np.any(M.values[(i - j) % 2 == 1] != 0.0):
        raise ContractError("matrix couples even and odd basis functions")
    idx = np.arange(parity.offset, 2 * n_keep, 2)
    return BandedSymmetricMatrix(M.values[np.ix_(idx, idx)], M.half_bandwidth // 2)


def hermite_functions(x, omega: float, n: int) -> np.ndarray:
    """Normalized basis functions ``f_0 .. f_{n-1}`` on the points ``x``; shape ``(n, len(x))``.

    Uses the three-term recurrence on the normalized functions, stable for large ``n``.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.sqrt(omega) * x
    out = np.empty((n, x.size))
    out[0] = (omega / np.pi) ** 0.25 * np.exp(-0.5 * y * y)
    if n > 1:
        out[1] = np.sqrt(2.0) * y * out[0]
    for k in range(2, n):
        out[k] = np.sqrt(2.0 / k) * y * out[k - 1] - np.sqrt((k - 1.0) / k) * out[k - 2]
    return out
