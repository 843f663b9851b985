"""Published convergence tables for the three double-well models.

Values are kept as the printed strings so that every comparison can use the
precision actually printed.  Fixed-point entries are truncated rather than
rounded, so a correct value may sit up to one full unit beyond the printed
digits; ``truncates_to`` tests that reading.  The competing
method's numbers for model 1 are quoted as ``lambda_n = E_n / 2``; models 2
and 3 quote ``E_n`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal
from typing import Optional

from .potential import EvenPolynomialPotential


def printed_value(s: Optional[str]) -> Optional[float]:
    return None if s is None else float(s)


def printed_tolerance(s: str) -> float:
    """Half a unit in the last printed place, e.g. ``"27.5170999" -> 5e-8``, ``"6.6e-6" -> 5e-8``."""
    exp = Decimal(s).as_tuple().exponent
    return 0.5 * 10.0**exp


def truncates_to(value: float, s: str) -> bool:
    """True when ``value`` cut (toward zero) or rounded to the digits of ``s`` gives ``s``."""
    target = Decimal(s)
    q = Decimal(1).scaleb(target.as_tuple().exponent)
    d = Decimal(repr(float(value)))
    return d.quantize(q, rounding=ROUND_DOWN) == target or d.quantize(q, rounding=ROUND_HALF_EVEN) == target


@dataclass(frozen=True)
class PublishedModel:
    name: str
    K: int
    A: tuple
    omega: float
    n_max: int

    @property
    def potential(self) -> EvenPolynomialPotential:
        return EvenPolynomialPotential(self.K, self.A)


@dataclass(frozen=True)
class PublishedTable:
    """One published table: rows ``N -> printed values`` for one parity."""

    table: int
    model: str
    parity: str
    states: tuple
    rows: dict
    competitor: tuple  # last row, None where the table leaves the cell empty
    competitor_convention: str  # "E" or "lambda"
    halved: Optional[tuple] = None
    notes: dict = field(default_factory=dict)

    @property
    def converged(self) -> tuple:
        return self.rows[max(self.rows)]

    def competitor_as_energy(self) -> tuple:
        scale = 2.0 if self.competitor_convention == "lambda" else 1.0
        return tuple(None if s is None else scale * float(s) for s in self.competitor)


MODELS = {
    "model1": PublishedModel("model1", 2, (1.0, -2.0, -2.0, 1.0), 4.0, 30),
    "model2": PublishedModel("model2", 2, (0.0, -26.0, 6.0, 1.0), 5.0, 30),
    "model3": PublishedModel("model3", 3, (0.0, 1.5, -2.5, 0.25, -0.5, 0.25), 5.0, 50),
}

_EVEN = (0, 2, 4, 6)
_ODD = (1, 3, 5, 7)

TABLES = {
    ("model1", "even"): PublishedTable(
        table=1,
        model="model1",
        parity="even",
        states=_EVEN,
        rows={
            5: ("0.02", "4.677918651", "14.53469054", "28.3757404"),
            10: ("6.6e-6", "4.62986462", "14.35154075", "27.52416887"),
            15: ("1.5e-8", "4.629826578", "14.3509522", "27.51712162"),
            20: ("8.6e-11", "4.629826494", "14.35095078", "27.51709995"),
            25: ("9.7e-13", "4.629826493", "14.35095078", "27.5170999"),
            30: ("2.5e-15", "4.629826493", "14.35095078", "27.5170999"),
        },
        halved=(None, "2.314913246", "7.17547539", "13.75854995"),
        competitor=("0", "2.31799", "7.18145", "13.7670"),
        competitor_convention="lambda",
    ),
    ("model1", "odd"): PublishedTable(
        table=2,
        model="model1",
        parity="odd",
        states=_ODD,
        rows={
            5: ("0.8655650394", "9.111949632", "20.98289274", "36.23196314"),
            10: ("0.8459004855", "9.007614525", "20.55620684", "35.17488491"),
            15: ("0.8458893236", "9.007557826", "20.55577168", "35.16841201"),
            20: ("0.845889291", "9.007557632", "20.55577029", "35.16839427"),
            25: ("0.8458892907", "9.00755763", "20.55577028", "35.16839416"),
            30: ("0.8458892907", "9.00755763", "20.55577028", "35.16839416"),
        },
        halved=("0.4229446453", "4.503778815", "10.27788514", "17.58419708"),
        competitor=("0.42388", "4.50813", "10.2852", "17.5941"),
        competitor_convention="lambda",
    ),
    ("model2", "even"): PublishedTable(
        table=3,
        model="model2",
        parity="even",
        states=_EVEN,
        rows={
            5: ("-14.39416156", "-2.418081882", "6.897731829", "23.83165889"),
            10: ("-14.47163202", "-2.523730405", "6.599680377", "21.61724028"),
            15: ("-14.47165595", "-2.523911539", "6.59851881", "21.60602543"),
            20: ("-14.47165597", "-2.523911704", "6.598517525", "21.60600654"),
            25: ("-14.47165597", "-2.523911705", "6.598517524", "21.60600652"),
            30: ("-14.47165597", "-2.523911705", "6.598517524", "21.60600652"),
        },
        competitor=("-14.4483", "-2.42763", "6.596869", "21.56765"),
        competitor_convention="E",
    ),
    ("model2", "odd"): PublishedTable(
        table=4,
        model="model2",
        parity="odd",
        states=_ODD,
        rows={
            5: ("-14.3640557", "-0.4515691057", "13.89792265", "32.55127969"),
            10: ("-14.42792517", "-0.6900912613", "13.35318022", "30.73875482"),
            15: ("-14.42794579", "-0.690175821", "13.3524621", "30.7269972"),
            20: ("-14.42794583", "-0.6901759943", "13.3524612", "30.72698225"),
            25: ("-14.42794583", "-0.6901759952", "13.35246119", "30.72698222"),
            30: ("-14.42794583", "-0.6901759952", "13.35246119", "30.72698222"),
        },
        competitor=("-14.4135", "-0.65821", "13.36402", None),
        competitor_convention="E",
    ),
    ("model3", "even"): PublishedTable(
        table=5,
        model="model3",
        parity="even",
        states=_EVEN,
        rows={
            5: ("0.09", "4.573017185", "16.36066839", "34.15352004"),
            10: ("0.002", "4.32310851", "15.61645666", "31.68651075"),
            15: ("6.1e-5", "4.315907553", "15.58461237", "31.54805825"),
            20: ("1.8e-6", "4.315700166", "15.58363087", "31.54320834"),
            25: ("2.1e-7", "4.31569472", "15.58360629", "31.54308125"),
            30: ("7.6e-10", "4.315694041", "15.58360331", "31.54306785"),
            35: ("1.0e-9", "4.315694019", "15.58360321", "31.54306732"),
            40: ("1.1e-10", "4.315694016", "15.58360319", "31.54306723"),
            45: ("8.5e-12", "4.315694015", "15.58360319", "31.54306722"),
            50: ("7.6e-13", "4.315694015", "15.58360319", "31.54306722"),
        },
        competitor=("0", "4.31612", "15.5851", "31.5460"),
        competitor_convention="E",
        notes={(30, 0): "printed 7.6e-10 breaks the monotone column; 7.6e-9 fits the neighbours"},
    ),
    ("model3", "odd"): PublishedTable(
        table=6,
        model="model3",
        parity="odd",
        states=_ODD,
        rows={
            5: ("1.256573678", "9.855150686", "24.44520554", "44.68121271"),
            10: ("1.048870482", "9.357073321", "23.02789536", "41.29594435"),
            15: ("1.046988529", "9.351398959", "23.00064258", "41.16116412"),
            20: ("1.046927491", "9.351217587", "22.9997951", "41.15687172"),
            25: ("1.046922323", "9.351202299", "22.99972988", "41.15661593"),
            30: ("1.046922115", "9.351201593", "22.99972602", "41.15659472"),
            35: ("1.046922092", "9.351201522", "22.99972569", "41.15659332"),
            40: ("1.046922091", "9.351201519", "22.99972568", "41.15659324"),
            45: ("1.046922091", "9.351201519", "22.99972568", "41.15659323"),
            50: ("1.046922091", "9.351201519", "22.99972568", "41.15659323"),
        },
        competitor=("1.04703", None, None, None),
        competitor_convention="E",
    ),
}


@dataclass(frozen=True)
class ReferenceSet:
    tables: dict

    def get(self, model: str, parity: str) -> Optional[PublishedTable]:
        return self.tables.get((model, parity))

    def manifest(self) -> list:
        """Every transcribed value with its table, row and column."""
        out = []
        for (model, parity), t in sorted(self.tables.items(), key=lambda kv: kv[1].table):
            for N, row in t.rows.items():
                for n, s in zip(t.states, row):
                    out.append({"table": t.table, "model": model, "row": N, "state": n, "value": s})
            if t.halved:
                for n, s in zip(t.states, t.halved):
                    if s is not None:
                        out.append({"table": t.table, "model": model, "row": "E_n/2", "state": n, "value": s})
            for n, s in zip(t.states, t.competitor):
                if s is not None:
                    out.append(
                        {
                            "table": t.table,
                            "model": model,
                            "row": f"competitor ({t.competitor_convention})",
                            "state": n,
                            "value": s,
                        }
                    )
        return out


PUBLISHED = ReferenceSet(TABLES)
