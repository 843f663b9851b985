"""Acceptance checks, one line of PASS/FAIL output per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py`` for just the summary lines.

Criteria 1-4 compare against printed values at half a unit of the last
printed digit.  Those printed values are truncated rather than rounded, so
a handful of cells sit just outside that window; the report names them.
"""

import time

import numpy as np
import pytest

from dwell import driver
from dwell.eigensolver import cauchy_interlace, eigh, interlace_check
from dwell.hamiltonian import assemble
from dwell.oracle import extrapolated_spectrum
from dwell.potential import EvenPolynomialPotential, qes_residuals, solve_ansatz
from dwell.references import printed_tolerance, truncates_to

MODEL1 = EvenPolynomialPotential(2, (1.0, -2.0, -2.0, 1.0))
MODEL2 = EvenPolynomialPotential(2, (0.0, -26.0, 6.0, 1.0))
MODEL3 = EvenPolynomialPotential(3, (0.0, 1.5, -2.5, 0.25, -0.5, 0.25))
OMEGA = {id(MODEL1): 4.0, id(MODEL2): 5.0, id(MODEL3): 5.0}


def levels(p, N, parity):
    return eigh(assemble(p, OMEGA[id(p)], N, parity)).eigenvalues


def report(label, failures, extra=""):
    line = f"{label}: {'PASS' if not failures else 'FAIL'}"
    if extra:
        line += f" ({extra})"
    for f in failures:
        line += f"\n    {f}"
    print(line)
    return line


def digit_failures(tag, values, printed):
    """Cells whose |computed - printed| exceeds half a unit of the last printed digit."""
    out = []
    for v, s in zip(values, printed):
        if s is None:
            continue
        tol = printed_tolerance(s)
        if not abs(v - float(s)) <= tol:
            how = "printed digits are its truncation" if truncates_to(v, s) else "digits differ"
            out.append(f"{tag}: computed {float(v)!r} vs {s}, |diff| {abs(v - float(s)):.2e} > {tol:.0e}; {how}")
    return out


def emit(capsys, label, failures, extra=""):
    with capsys.disabled():
        print()
        report(label, failures, extra)
    assert not failures, "\n".join(failures)


def criterion1():
    t0 = time.perf_counter()
    even = levels(MODEL1, 30, "even")
    odd = levels(MODEL1, 30, "odd")
    elapsed = time.perf_counter() - t0
    fails = digit_failures("model1 even E2,E4,E6", even[1:4], ("4.629826493", "14.35095078", "27.5170999"))
    fails += digit_failures(
        "model1 odd E1..E7", odd[:4], ("0.8458892907", "9.00755763", "20.55577028", "35.16839416")
    )
    if not abs(even[0]) <= 1e-9:
        fails.append(f"|E0| = {abs(even[0]):.2e} > 1e-9")
    if not elapsed < 5.0:
        fails.append(f"runtime {elapsed:.2f}s >= 5s")
    return fails, f"runtime {elapsed:.3f}s"


def criterion2():
    fails = digit_failures(
        "model2 even N=30",
        levels(MODEL2, 30, "even")[:4],
        ("-14.47165597", "-2.523911705", "6.598517524", "21.60600652"),
    )
    fails += digit_failures(
        "model2 odd N=30",
        levels(MODEL2, 30, "odd")[:4],
        ("-14.42794583", "-0.6901759952", "13.35246119", "30.72698222"),
    )
    return fails, ""


def criterion3():
    even = levels(MODEL3, 50, "even")
    fails = digit_failures("model3 even E2,E4,E6", even[1:4], ("4.315694015", "15.58360319", "31.54306722"))
    fails += digit_failures(
        "model3 odd N=50", levels(MODEL3, 50, "odd")[:4], ("1.046922091", "9.351201519", "22.99972568", "41.15659323")
    )
    if not abs(even[0]) <= 1e-6:
        fails.append(f"|E0| = {abs(even[0]):.2e} > 1e-6")
    return fails, ""


def criterion4():
    fails = digit_failures(
        "model1 even N=10", levels(MODEL1, 10, "even")[:4], ("6.6e-6", "4.62986462", "14.35154075", "27.52416887")
    )
    fails += digit_failures(
        "model2 odd N=5", levels(MODEL2, 5, "odd")[:4], ("-14.3640557", "-0.4515691057", "13.89792265", "32.55127969")
    )
    return fails, ""


def criterion5():
    cfg = driver.ModelConfig(name="model2", K=2, A=(0, -26, 6, 1), omega=5, N_list=(10, 20, 30), parity="even")
    rep = driver.compare_reference(driver.run_convergence(cfg)[0])
    fails = [] if rep.violations == [4, 6] else [f"flagged states {rep.violations}, expected [4, 6]"]
    return fails, f"flagged {rep.violations}"


def criterion6():
    fails = []
    r1, r3 = qes_residuals(MODEL1), qes_residuals(MODEL3)
    if not abs(r1.r1) <= 1e-12:
        fails.append(f"model1 r1 = {r1.r1!r}")
    if not (abs(r3.r1) <= 1e-12 and abs(r3.r2) <= 1e-12):
        fails.append(f"model3 residuals = {r3.r1!r}, {r3.r2!r}")
    r2 = qes_residuals(MODEL2).r1
    if not abs(r2 + 128) <= 1e-12:
        fails.append(f"model2 r1 = {r2!r}, expected -128")
    for p, F in ((MODEL1, (-0.5, 0.25)), (MODEL3, (0.0, -1 / 8, 1 / 12))):
        a = solve_ansatz(p)
        if a is None:
            fails.append(f"no ansatz found for K={p.K}")
            continue
        if not np.allclose(a.F[1:], F, atol=1e-12, rtol=0) or abs(a.E0) > 1e-12:
            fails.append(f"K={p.K}: F={a.F[1:]}, E0={a.E0!r}")
    return fails, ""


def criterion7():
    fails = []
    for name, p in (("model1", MODEL1), ("model2", MODEL2), ("model3", MODEL3)):
        for parity in ("even", "odd"):
            prev = eigh(assemble(p, OMEGA[id(p)], 5, parity))
            for N in range(6, 51):
                curr = eigh(assemble(p, OMEGA[id(p)], N, parity))
                if curr.max_residual > 1e-10 or curr.max_orthogonality_error > 1e-10:
                    fails.append(f"{name} {parity} N={N}: residual/orthogonality above 1e-10")
                if not (interlace_check(prev, curr) and cauchy_interlace(prev, curr)):
                    fails.append(f"{name} {parity} N={N}: interlacing broken")
                prev = curr
    for parity in ("even", "odd"):
        ref = np.linalg.eigvalsh(assemble(MODEL1, 4.0, 40, parity).H.values)[:4]
        for w in (3.0, 5.0):
            other = np.linalg.eigvalsh(assemble(MODEL1, w, 40, parity).H.values)[:4]
            if np.abs(other - ref).max() > 1e-8:
                fails.append(f"model1 {parity}: omega={w} moves levels by {np.abs(other - ref).max():.1e}")
    union = np.sort(np.concatenate([levels(MODEL1, 30, "even"), levels(MODEL1, 30, "odd")]))[:8]
    full = np.linalg.eigvalsh(assemble(MODEL1, 4.0, 60, "full").H.values)[:8]
    if np.abs(union - full).max() > 1e-8:
        fails.append(f"parity union differs from full basis by {np.abs(union - full).max():.1e}")
    return fails, ""


def criterion8():
    fails, worst = [], 0.0
    t0 = time.perf_counter()
    for name, p, N in (("model1", MODEL1, 30), ("model2", MODEL2, 30), ("model3", MODEL3, 50)):
        basis = np.sort(np.concatenate([levels(p, N, "even"), levels(p, N, "odd")]))[:6]
        grid = np.array(extrapolated_spectrum(p, count=6))
        d = np.abs(basis - grid).max()
        worst = max(worst, d)
        if not d <= 1e-5:
            fails.append(f"{name}: max |basis - grid| = {d:.1e}")
    elapsed = time.perf_counter() - t0
    if not elapsed < 60.0:
        fails.append(f"oracle runtime {elapsed:.1f}s >= 60s")
    return fails, f"max diff {worst:.1e}, runtime {elapsed:.2f}s"


def criterion9():
    fails = []
    for N in range(5, 51):
        e0 = levels(MODEL1, N, "even")[0]
        if e0 < -1e-9:
            fails.append(f"E0[N={N}] = {e0!r} < -1e-9")
        if N >= 25 and abs(e0) > 1e-9:
            fails.append(f"|E0[N={N}]| = {abs(e0):.2e} > 1e-9")
    return fails, ""


CRITERIA = [
    ("C1 model 1 converged levels", criterion1),
    ("C2 model 2 converged levels", criterion2),
    ("C3 model 3 converged levels", criterion3),
    ("C4 intermediate golden rows", criterion4),
    ("C5 bound-violation detection", criterion5),
    ("C6 exact ground-state conditions", criterion6),
    ("C7 property suite", criterion7),
    ("C8 grid oracle agreement", criterion8),
    ("C9 near-zero ground state", criterion9),
]


@pytest.mark.parametrize("label, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, capsys):
    fails, extra = check()
    emit(capsys, label, fails, extra)


def test_truncated_cells_are_the_only_misses():
    """Every half-unit miss in criteria 1-4 is a cell whose printed digits truncate the computed value."""
    misses = []
    for check in (criterion1, criterion2, criterion3, criterion4):
        misses += check()[0]
    assert all("printed digits are its truncation" in m for m in misses)


if __name__ == "__main__":
    for label, check in CRITERIA:
        fails, extra = check()
        report(label, fails, extra)
