"""Variational spectra of even polynomial double-well oscillators in a harmonic-oscillator basis."""

from .basis_ops import (
    BandedSymmetricMatrix,
    BasisSpec,
    Parity,
    hermite_functions,
    kinetic_matrix,
    parity_restrict,
    position_matrix,
    power_matrix,
)
from .eigensolver import EigenSolution, eigh, interlace_check, solve_matrix, upper_bound_check
from .hamiltonian import AssembledBlock, assemble, omega_select, omega_star, trace_head
from .oracle import GridSpec, fd_spectrum, richardson
from .potential import (
    EvenPolynomialPotential,
    ExponentAnsatz,
    QesResiduals,
    evaluate_potential,
    qes_residuals,
    reference_potential,
    solve_ansatz,
)

__version__ = "0.1.0"
