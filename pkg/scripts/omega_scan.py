"""Scan the trial frequency: head-of-trace slope and the converged levels it produces."""

import argparse

import numpy as np

from dwell.eigensolver import eigh
from dwell.hamiltonian import assemble, omega_star, trace_head, trace_slope
from dwell.references import MODELS


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("model", choices=sorted(MODELS))
    ap.add_argument("--M", type=int, default=10)
    ap.add_argument("--N", type=int, default=20, help="basis size for the level column")
    ap.add_argument("--omegas", type=float, nargs="+", default=list(np.arange(1.0, 10.5, 1.0)))
    args = ap.parse_args()

    p = MODELS[args.model].potential
    print(f"stationary point of the trace head (M={args.M}): {omega_star(p, args.M):.6f}")
    print(f"{'omega':>6s} {'trace':>14s} {'slope':>12s} {'E0 even':>16s} {'E1 odd':>16s}")
    for w in args.omegas:
        e0 = eigh(assemble(p, w, args.N, "even")).eigenvalues[0]
        e1 = eigh(assemble(p, w, args.N, "odd")).eigenvalues[0]
        print(f"{w:6.2f} {trace_head(p, w, args.M):14.6f} {trace_slope(p, w, args.M):12.4e} {e0:16.10f} {e1:16.10f}")


if __name__ == "__main__":
    main()
