"""Convergence studies, comparison with the published tables, and report files."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from .basis_ops import Parity
from .eigensolver import BOUND_TOL, INTERLACE_SLACK, eigh
from .errors import ContractError, ConvergenceAborted, SolverError, VariationalBoundError
from .hamiltonian import DEFAULT_BRACKET, assemble, omega_select, omega_star
from .potential import EvenPolynomialPotential
from .references import PUBLISHED, ReferenceSet, printed_tolerance, truncates_to

log = logging.getLogger(__name__)

DEFAULT_N_LIST = tuple(range(5, 55, 5))
CONVERGED_TOL = 1e-8


@dataclass(frozen=True)
class ModelConfig:
    name: str
    K: int
    A: Union[tuple, dict]
    omega: Union[float, str] = "auto"
    M: int = 10
    N_list: tuple = DEFAULT_N_LIST
    parity: str = "both"
    report_halved: bool = False
    n_states: int = 4
    reference: Optional[str] = None  # key into the embedded tables; defaults to ``name``

    def __post_init__(self):
        object.__setattr__(self, "N_list", tuple(int(n) for n in self.N_list))
        if not self.N_list or any(b <= a for a, b in zip(self.N_list, self.N_list[1:])):
            raise ContractError(f"N_list must be non-empty and strictly increasing, got {self.N_list}")
        if self.N_list[0] < 1:
            raise ContractError("basis sizes must be positive")
        if self.parity not in ("even", "odd", "both"):
            raise ContractError(f"parity must be even, odd or both, got {self.parity!r}")
        if self.omega != "auto" and not float(self.omega) > 0:
            raise ContractError(f"omega must be positive or 'auto', got {self.omega!r}")
        if self.M < 0 or self.n_states < 1:
            raise ContractError("M must be >= 0 and n_states >= 1")
        # validates K and the coefficients
        self.potential  # noqa: B018

    @property
    def potential(self) -> EvenPolynomialPotential:
        return EvenPolynomialPotential(self.K, self.A)

    @property
    def parities(self) -> tuple:
        return ("even", "odd") if self.parity == "both" else (self.parity,)

    @property
    def reference_key(self) -> str:
        return self.reference or self.name

    @classmethod
    def from_dict(cls, d: dict) -> "ModelConfig":
        d = dict(d)
        unknown = set(d) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise ContractError(f"unknown config keys: {sorted(unknown)}")
        if isinstance(d.get("A"), dict):
            d["A"] = {int(k): float(v) for k, v in d["A"].items()}
        elif "A" in d:
            d["A"] = tuple(float(v) for v in d["A"])
        if "N_list" in d:
            d["N_list"] = tuple(d["N_list"])
        return cls(**d)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "K": self.K,
            "A": {str(k): v for k, v in self.potential.as_degree_map().items()},
            "omega": self.omega,
            "M": self.M,
            "N_list": list(self.N_list),
            "parity": self.parity,
            "report_halved": self.report_halved,
            "n_states": self.n_states,
        }


def load_configs(path) -> list:
    """Read a JSON config holding one model object or ``{"models": [...]}``."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    items = doc["models"] if isinstance(doc, dict) and "models" in doc else doc
    if isinstance(items, dict):
        items = [items]
    return [ModelConfig.from_dict(item) for item in items]


@dataclass
class ConvergenceTable:
    model: str
    parity: str
    omega: float
    states: tuple
    rows: list  # (N, [E...]) with None where N is too small
    converged: tuple = ()
    omega_root: Optional[float] = None
    M: Optional[int] = None
    coefficients: dict = field(default_factory=dict)
    halved: Optional[list] = None
    oracle: Optional[list] = None

    @property
    def last(self) -> list:
        return self.rows[-1][1]

    def column(self, i: int) -> list:
        return [row[1][i] for row in self.rows]

    def header(self) -> list:
        return ["N"] + [f"E{n}" for n in self.states]


def _check_monotone(table: ConvergenceTable) -> None:
    for i, n in enumerate(table.states):
        col = [v for v in table.column(i) if v is not None]
        for a, b in zip(col, col[1:]):
            if b > a + INTERLACE_SLACK:
                raise VariationalBoundError(
                    f"{table.model} {table.parity} E{n} rose from {a!r} to {b!r} as N grew", partial=table
                )


def _converged_flags(table: ConvergenceTable) -> tuple:
    if len(table.rows) < 2:
        return tuple(False for _ in table.states)
    prev, last = table.rows[-2][1], table.rows[-1][1]
    return tuple(
        a is not None and b is not None and abs(a - b) <= CONVERGED_TOL * max(1.0, abs(b))
        for a, b in zip(prev, last)
    )


def resolve_omega(cfg: ModelConfig):
    """``(omega, root)``; root is the real stationary point when omega is 'auto'."""
    if cfg.omega == "auto":
        root = omega_star(cfg.potential, cfg.M, DEFAULT_BRACKET)
        return float(omega_select(cfg.potential, cfg.M)), root
    return float(cfg.omega), None


def run_convergence(cfg: ModelConfig) -> list:
    """One table per requested parity: lowest ``n_states`` levels at every N."""
    p = cfg.potential
    omega, root = resolve_omega(cfg)
    log.info("%s: omega=%g (root %s)", cfg.name, omega, root)
    out = []
    for parity in cfg.parities:
        offset = Parity(parity).offset
        table = ConvergenceTable(
            model=cfg.name,
            parity=parity,
            omega=omega,
            states=tuple(offset + 2 * i for i in range(cfg.n_states)),
            rows=[],
            omega_root=root,
            M=cfg.M,
            coefficients={str(k): v for k, v in p.as_degree_map().items()},
        )
        for N in cfg.N_list:
            try:
                sol = eigh(assemble(p, omega, N, parity))
            except SolverError as exc:
                raise ConvergenceAborted(f"{cfg.name} {parity} N={N}: {exc}", partial=table) from exc
            vals = [float(v) for v in sol.eigenvalues[: cfg.n_states]]
            vals += [None] * (cfg.n_states - len(vals))
            table.rows.append((N, vals))
        _check_monotone(table)
        table.converged = _converged_flags(table)
        if cfg.report_halved:
            table.halved = [None if v is None else v / 2.0 for v in table.last]
        out.append(table)
    return out


def attach_oracle(tables: Sequence[ConvergenceTable], cfg: ModelConfig, n_points: int = 4001) -> None:
    """Fill ``table.oracle`` with finite-difference levels of matching parity."""
    from .oracle import parity_resolved_spectrum

    count = 2 * cfg.n_states
    levels = parity_resolved_spectrum(cfg.potential, count=count, n_points=n_points)
    for t in tables:
        t.oracle = levels[t.parity][: len(t.states)]


@dataclass
class StateComparison:
    state: int
    computed: Optional[float]
    published: Optional[str]
    published_diff: Optional[float]
    published_tolerance: Optional[float]
    published_match: Optional[bool]
    published_digits_match: Optional[bool]
    competitor: Optional[float]  # energy convention
    competitor_minus_computed: Optional[float]
    bound_violation: bool


@dataclass
class ComparisonReport:
    model: str
    parity: str
    table: Optional[int]
    states: list

    @property
    def violations(self) -> list:
        return [s.state for s in self.states if s.bound_violation]


def compare_reference(
    table: ConvergenceTable, refs: ReferenceSet = PUBLISHED, key: Optional[str] = None, tol: float = BOUND_TOL
) -> ComparisonReport:
    """Compare the converged row with the published one and flag competitor values below it.

    A competitor value more than ``tol`` below a converged variational level cannot be an
    upper bound to the exact energy.  Missing references are reported as ``None``.
    """
    ref = refs.get(key or table.model, table.parity)
    states = []
    for i, n in enumerate(table.states):
        e = table.last[i]
        published = comp = None
        if ref is not None and n in ref.states:
            j = ref.states.index(n)
            published = ref.converged[j]
            comp = ref.competitor_as_energy()[j]
        diff = None if published is None or e is None else abs(e - float(published))
        ptol = None if published is None else printed_tolerance(published)
        gap = None if comp is None or e is None else comp - e
        states.append(
            StateComparison(
                state=n,
                computed=e,
                published=published,
                published_diff=diff,
                published_tolerance=ptol,
                published_match=None if diff is None else diff <= ptol,
                published_digits_match=None if diff is None else truncates_to(e, published),
                competitor=comp,
                competitor_minus_computed=gap,
                bound_violation=gap is not None and gap < -tol,
            )
        )
    return ComparisonReport(table.model, table.parity, None if ref is None else ref.table, states)


def self_reference(tables: Sequence[ConvergenceTable]) -> ReferenceSet:
    """A reference set built from computed tables (printed at full precision)."""
    from .references import PublishedTable

    out = {}
    for t in tables:
        printed = tuple(repr(v) for v in t.last)
        out[(t.model, t.parity)] = PublishedTable(
            table=0,
            model=t.model,
            parity=t.parity,
            states=t.states,
            rows={t.rows[-1][0]: printed},
            competitor=printed,
            competitor_convention="E",
        )
    return ReferenceSet(out)


def _fmt(v) -> str:
    return "" if v is None else format(v, ".10g")


def table_to_csv(table: ConvergenceTable, comparison: Optional[ComparisonReport] = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.header())
    for N, vals in table.rows:
        w.writerow([N] + [_fmt(v) for v in vals])
    if table.halved is not None:
        w.writerow(["E_n/2"] + [_fmt(v) for v in table.halved])
    if table.oracle is not None:
        w.writerow(["oracle"] + [_fmt(v) for v in table.oracle])
    if comparison is not None and any(s.competitor is not None for s in comparison.states):
        w.writerow(["Ref."] + [_fmt(s.competitor) for s in comparison.states])
    return buf.getvalue()


def _table_json(table: ConvergenceTable) -> dict:
    return {
        "model": table.model,
        "parity": table.parity,
        "omega": table.omega,
        "omega_root": table.omega_root,
        "M": table.M,
        "coefficients": table.coefficients,
        "states": list(table.states),
        "rows": [{"N": N, "E": vals} for N, vals in table.rows],
        "converged": list(table.converged),
        "halved": table.halved,
        "oracle": table.oracle,
    }


def _comparison_json(c: ComparisonReport) -> dict:
    return {
        "model": c.model,
        "parity": c.parity,
        "table": c.table,
        "violations": c.violations,
        "states": [asdict(s) for s in c.states],
    }


def report_document(tables, comparisons) -> dict:
    return {
        "tables": [_table_json(t) for t in tables],
        "comparisons": [_comparison_json(c) for c in comparisons],
    }


def emit_report(tables, comparisons, format: str, destination) -> list:
    """Write the report files plus ``manifest.json``; returns the written paths."""
    if format not in ("csv", "json"):
        raise ContractError(f"format must be csv or json, got {format!r}")
    dest = Path(destination)
    try:
        dest.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {dest}: {exc}") from exc

    by_key = {(c.model, c.parity): c for c in comparisons}
    files = {}
    if format == "csv":
        for t in tables:
            files[f"{t.model}_{t.parity}.csv"] = table_to_csv(t, by_key.get((t.model, t.parity)))
    elif tables or comparisons:
        files["report.json"] = json.dumps(report_document(tables, comparisons), indent=2, sort_keys=True) + "\n"
    files["manifest.json"] = json.dumps({"files": sorted(n for n in files)}, indent=2) + "\n"

    written = []
    for name in sorted(files):
        path = dest / name
        try:
            path.write_text(files[name], newline="\n")
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc}") from exc
        written.append(path)
    return written
