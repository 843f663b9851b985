"""Command line entry point: ``dwell run config.json`` and ``dwell qes``.

Exit codes: 0 on success, 1 on errors, 2 when ``--strict`` is given and a
published competitor value lies below a converged variational level.
The ``DWELL_SEED`` environment variable is ignored; nothing here is random.
"""

from __future__ import annotations

import argparse
import fnmatch
import logging
import sys
from pathlib import Path

from . import driver
from .errors import ConvergenceAborted
from .potential import EvenPolynomialPotential, qes_residuals, solve_ansatz

log = logging.getLogger("dwell")


def _select(configs, pattern):
    if not pattern:
        return configs
    pats = [p.strip() for p in pattern.split(",") if p.strip()]
    return [c for c in configs if any(fnmatch.fnmatchcase(c.name, p) for p in pats)]


def cmd_run(args) -> int:
    configs = _select(driver.load_configs(args.config), args.models)
    tables, comparisons = [], []
    for cfg in configs:
        try:
            model_tables = driver.run_convergence(cfg)
        except ConvergenceAborted as exc:
            log.error("%s", exc)
            if exc.partial is not None and exc.partial.rows:
                sys.stderr.write(driver.table_to_csv(exc.partial))
            return 1
        if args.oracle:
            driver.attach_oracle(model_tables, cfg)
        for t in model_tables:
            comparisons.append(driver.compare_reference(t, key=cfg.reference_key))
        tables.extend(model_tables)

    paths = driver.emit_report(tables, comparisons, args.format, args.out)
    for p in paths:
        print(p)
    violations = [(c.model, c.parity, s) for c in comparisons for s in c.violations]
    for model, parity, state in violations:
        log.warning("%s %s: competitor E%d lies below the converged variational level", model, parity, state)
    if args.strict and violations:
        return 2
    return 0


def cmd_qes(args) -> int:
    p = EvenPolynomialPotential.from_coefficients(args.coefficients)
    r = qes_residuals(p)
    print(f"residuals: r1={r.r1!r}" + ("" if r.r2 is None else f" r2={r.r2!r}"))
    a = solve_ansatz(p)
    if a is None:
        print("no exact exponential ground state")
    else:
        terms = ", ".join(f"F{j}={f!r}" for j, f in enumerate(a.F) if j)
        print(f"psi0 = exp(-F): {terms}; E0={a.E0!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dwell", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="convergence tables for the models in a JSON config")
    run.add_argument("config", type=Path)
    run.add_argument("--format", choices=("csv", "json"), default="csv")
    run.add_argument("--out", type=Path, default=Path("out"))
    run.add_argument("--models", help="comma-separated name patterns (fnmatch)")
    run.add_argument("--oracle", action="store_true", help="append finite-difference cross-check values")
    run.add_argument("--strict", action="store_true", help="exit 2 on any bound violation")
    run.set_defaults(func=cmd_run)

    qes = sub.add_parser("qes", help="check the exact-ground-state conditions for A_0 A_2 ... A_{4K-2}")
    qes.add_argument("coefficients", type=float, nargs="+")
    qes.set_defaults(func=cmd_qes)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except Exception as exc:  # noqa: BLE001
        log.error("%s: %s", type(exc).__name__, exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
