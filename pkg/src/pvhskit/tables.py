"""Recorded weight tables and decomposition identities, and their checkers.

The weight tables live in ``data/golden_tables.txt`` (one family-tagged tuple
per line).  The decomposition identities below are the reference statements
for type IV, V and VI domains; type IV entries are written as so(n) highest
weights in the epsilon basis (partitions) and converted to Dynkin labels
for the actual rank, since the generic label Gamma_{1,1,0,...,0} only reads
literally for n >= 7.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .pvhs import DomainSpec, generating_check, kernel_I_k, sym_tangent
from .repchar import Decomposition, IrrepLabel, weight_system
from .rootsys import build_root_system

_TUPLE = re.compile(r"^(E6|E7)\s*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*\.?\s*$")

TABLE_REPS = {"E6": ("E6", 6, (1, 0, 0, 0, 0, 0)), "E7": ("E7", 7, (0, 0, 0, 0, 0, 0, 1))}


def default_table_path() -> Path:
    return Path(str(resources.files("pvhskit") / "data" / "golden_tables.txt"))


def load_golden_tables(path: str | Path | None = None) -> dict[str, list[tuple[int, ...]]]:
    text = Path(path or default_table_path()).read_text()
    out: dict[str, list[tuple[int, ...]]] = {"E6": [], "E7": []}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _TUPLE.match(line)
        if not m:
            raise ValueError(f"{path or 'golden_tables.txt'}:{lineno}: cannot parse {raw!r}")
        out[m.group(1)].append(tuple(int(x) for x in m.group(2).split(",")))
    return out


def golden_tables(path: str | Path | None = None) -> dict[str, list[tuple[int, ...]]]:
    return load_golden_tables(path)


@dataclass
class TableCheck:
    family: str
    expected_size: int
    table_size: int
    missing: list[tuple[int, ...]] = field(default_factory=list)  # computed, absent from the table
    extra: list[tuple[int, ...]] = field(default_factory=list)  # in the table, not a weight
    duplicates: list[tuple[int, ...]] = field(default_factory=list)
    nontrivial_multiplicities: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.missing or self.extra or self.duplicates or self.nontrivial_multiplicities) and (
            self.table_size == self.expected_size
        )

    @property
    def matched(self) -> int:
        return self.table_size - len(self.extra) - len(self.duplicates)


def check_golden_tables(path: str | Path | None = None) -> list[TableCheck]:
    tables = load_golden_tables(path)
    results = []
    for fam, (family, rank, hw) in TABLE_REPS.items():
        ws = weight_system(build_root_system(family, rank), hw)
        computed = {w.coords: m for w, m in ws.items()}
        rows = tables[fam]
        seen = set()
        check = TableCheck(fam, len(computed), len(rows))
        for t in rows:
            if t in seen:
                check.duplicates.append(t)
            seen.add(t)
            if t not in computed:
                check.extra.append(t)
        check.missing = sorted(set(computed) - seen, reverse=True)
        check.nontrivial_multiplicities = [(w, m) for w, m in computed.items() if m != 1]
        results.append(check)
    return results


# ---------------------------------------------------------------------------
# decomposition identities


def so_label(lam: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Dynkin label of the so(n) irreducible with epsilon-highest weight lam."""
    parts = list(lam)
    if n == 3:
        parts += [0]
        return (2 * parts[0],)
    m = n // 2
    parts += [0] * (m - len(parts))
    if n == 4:
        return (parts[0] - parts[1], parts[0] + parts[1])
    head = tuple(parts[i] - parts[i + 1] for i in range(m - 1))
    if n % 2:
        return head + (2 * parts[m - 1],)
    return head[:-1] + (parts[m - 2] - parts[m - 1], parts[m - 2] + parts[m - 1])


# quantity -> list of (highest weight, charge, multiplicity)
_TYPE_IV = {
    "T": [((1,), 2, 1)],
    "S2": [((2,), 4, 1), ((), 4, 1)],
    "I2": [((2,), 4, 1)],
    "I2xT": [((3,), 6, 1), ((1,), 6, 1), ((2, 1), 6, 1)],
    "S3": [((3,), 6, 1), ((1,), 6, 1)],
}

_TYPE_V = {
    "T": [((0, 0, 0, 1, 0), 2, 1)],
    "S2": [((0, 0, 0, 2, 0), 4, 1), ((1, 0, 0, 0, 0), 4, 1)],
    "I2": [((0, 0, 0, 2, 0), 4, 1)],
    "I2xT": [((0, 0, 0, 3, 0), 6, 1), ((1, 0, 0, 1, 0), 6, 1), ((0, 0, 1, 1, 0), 6, 1)],
    "S3": [((0, 0, 0, 3, 0), 6, 1), ((1, 0, 0, 1, 0), 6, 1)],
}

_TYPE_VI = {
    "T": [((1, 0, 0, 0, 0, 0), 2, 1)],
    "S2": [((2, 0, 0, 0, 0, 0), 4, 1), ((0, 0, 0, 0, 0, 1), 4, 1)],
    "I2": [((2, 0, 0, 0, 0, 0), 4, 1)],
    "I2xT": [((1, 0, 0, 0, 0, 1), 6, 1), ((3, 0, 0, 0, 0, 0), 6, 1), ((1, 0, 1, 0, 0, 0), 6, 1)],
    "S3": [((1, 0, 0, 0, 0, 1), 6, 1), ((3, 0, 0, 0, 0, 0), 6, 1), ((0, 0, 0, 0, 0, 0), 6, 1)],
    "I3": [((1, 0, 0, 0, 0, 1), 6, 1), ((3, 0, 0, 0, 0, 0), 6, 1)],
    # nine summands as recorded; (2,0,0,0,0,1) is listed twice
    "I2xS2": [
        ((4, 0, 0, 0, 0, 0), 8, 1),
        ((2, 0, 0, 0, 0, 1), 8, 1),
        ((0, 0, 0, 0, 0, 2), 8, 1),
        ((2, 0, 1, 0, 0, 0), 8, 1),
        ((0, 0, 2, 0, 0, 0), 8, 1),
        ((0, 0, 1, 0, 0, 1), 8, 1),
        ((1, 0, 0, 0, 0, 0), 8, 1),
        ((1, 1, 0, 0, 0, 0), 8, 1),
        ((2, 0, 0, 0, 0, 1), 8, 1),
    ],
    "S4": [
        ((4, 0, 0, 0, 0, 0), 8, 1),
        ((2, 0, 0, 0, 0, 1), 8, 1),
        ((0, 0, 0, 0, 0, 2), 8, 1),
        ((1, 0, 0, 0, 0, 0), 8, 1),
    ],
}

QUANTITIES = ("T", "S2", "I2", "I2xT", "S3", "I3", "I2xS2", "S4")


def reference_identities(spec: DomainSpec) -> dict[str, Decomposition]:
    if spec.family == "IV":
        table = {
            q: [(so_label(lam, spec.params[0]), c, m) for lam, c, m in rows] for q, rows in _TYPE_IV.items()
        }
    elif spec.family == "V":
        table = _TYPE_V
    elif spec.family == "VI":
        table = _TYPE_VI
    else:
        raise ValueError(f"no recorded identities for type {spec.family}")
    out = {}
    for q, rows in table.items():
        comp: dict[IrrepLabel, int] = {}
        for coords, charge, m in rows:
            lab = IrrepLabel.of(coords, charge)
            comp[lab] = comp.get(lab, 0) + m
        out[q] = Decomposition(comp)
    return out


def compute_quantity(spec: DomainSpec, quantity: str) -> Decomposition:
    if quantity == "T":
        return Decomposition.of(spec.tangent)
    if quantity.startswith("S"):
        return sym_tangent(spec, int(quantity[1:]))
    if quantity in ("I2", "I3"):
        return kernel_I_k(spec, int(quantity[1:]))
    if quantity == "I2xT":
        return generating_check(spec, 3).product
    if quantity == "I2xS2":
        return generating_check(spec, 4).product
    raise ValueError(f"unknown quantity {quantity!r}")


@dataclass
class IdentityCheck:
    spec: DomainSpec
    quantity: str
    recorded: Decomposition
    computed: Decomposition

    @property
    def passed(self) -> bool:
        return self.recorded == self.computed

    def discrepancies(self) -> dict[IrrepLabel, tuple[int, int]]:
        labels = set(self.recorded.labels()) | set(self.computed.labels())
        return {
            lab: (self.recorded.multiplicity(lab), self.computed.multiplicity(lab))
            for lab in sorted(labels)
            if self.recorded.multiplicity(lab) != self.computed.multiplicity(lab)
        }


def check_identities(spec: DomainSpec) -> list[IdentityCheck]:
    recorded = reference_identities(spec)
    return [
        IdentityCheck(spec, q, recorded[q], compute_quantity(spec, q)) for q in QUANTITIES if q in recorded
    ]
