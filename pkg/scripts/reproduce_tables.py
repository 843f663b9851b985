"""Recompute every embedded reference table and print it beside the published digits.

Each cell shows the computed value and a marker: ``=`` when the printed digits
are the truncation or rounding of the computed value, ``!`` otherwise.
"""

import argparse

from dwell.eigensolver import eigh
from dwell.hamiltonian import assemble
from dwell.references import MODELS, TABLES, truncates_to


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--table", type=int, help="print only this table number")
    args = ap.parse_args()

    mismatches = 0
    for (model, parity), t in sorted(TABLES.items(), key=lambda kv: kv[1].table):
        if args.table and t.table != args.table:
            continue
        m = MODELS[model]
        print(f"\nTable {t.table}: {model} {parity}, omega={m.omega:g}")
        print("  N  " + "".join(f"{'E%d' % n:>24s}" for n in t.states))
        for N, printed in sorted(t.rows.items()):
            e = eigh(assemble(m.potential, m.omega, N, parity)).eigenvalues
            cells = []
            for v, s in zip(e, printed):
                ok = truncates_to(v, s)
                mismatches += not ok
                cells.append(f"{v:>21.12g} {'=' if ok else '!'} ")
            print(f"{N:>3d}  " + "".join(cells))
        comp = t.competitor_as_energy()
        if any(c is not None for c in comp):
            print("Ref. " + "".join(f"{'' if c is None else format(c, '.10g'):>24s}" for c in comp))
        for note in t.notes:
            print(f"  note: {note}")
    print(f"\ncells whose printed digits do not follow from the computed value: {mismatches}")


if __name__ == "__main__":
    main()
