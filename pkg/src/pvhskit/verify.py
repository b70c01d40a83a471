"""Verification matrix behind ``pvhskit verify``.

Each check produces a :class:`CheckRecord`; a report is the list of records
sorted by check id, so output order never depends on execution order.
"""

from __future__ import annotations

import json
import time
from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass

from .higgs import higgs_sweep
from .pvhs import (
    DomainSpec,
    catalog,
    expected_sym_dimension,
    generating_check,
    image_J_k,
    kernel_I_k,
    strata_dimension_typeA,
    sym_tangent,
    sym_tangent_characters,
    verify_weight_bound,
)
from .repchar import weyl_dimension
from .tables import check_golden_tables, check_identities

REPORT_VERSION = "1.0"
SECTIONS = ("tables", "bound", "generating", "higgs", "strata", "identities", "invariants")


@dataclass
class CheckRecord:
    id: str
    family: str | None
    params: list[int]
    k: int | None
    expected: str
    computed: str
    passed: bool
    ms: int

    def as_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if d["k"] is None:
            del d["k"]
        return d


@dataclass
class Selection:
    family: str | None = None
    p: int | None = None
    q: int | None = None
    n: int | None = None
    samples: int = 1000
    seed: int = 7
    golden: str | None = None


# ---------------------------------------------------------------------------
# domain matrices


def bound_domains() -> list[tuple]:
    out = [("I", p, q) for q in range(1, 5) for p in range(1, q + 1)]
    out += [("III", n) for n in range(2, 5)]
    out += [("II", n) for n in range(3, 7)]
    out += [("IV", n) for n in range(3, 9)]
    return out + [("V",), ("VI",)]


def generating_domains() -> list[tuple]:
    return [d for d in bound_domains() if not (d[0] == "IV" and d[1] > 7)]


def _matches(key: tuple, sel: Selection) -> bool:
    if sel.family is None:
        return True
    if key[0] != sel.family:
        return False
    if key[0] == "I":
        return (sel.p is None or key[1] == sel.p) and (sel.q is None or key[2] == sel.q)
    if key[0] in ("II", "III", "IV"):
        return sel.n is None or key[1] == sel.n
    return True


def _select(domains: Iterable[tuple], sel: Selection) -> list[tuple]:
    chosen = [d for d in domains if _matches(d, sel)]
    if sel.family is not None and not chosen:
        # a domain outside the default matrix was asked for explicitly
        if sel.family == "I":
            chosen = [("I", sel.p or 1, sel.q or 1)]
        elif sel.family in ("II", "III", "IV"):
            if sel.n is None:
                raise ValueError(f"type {sel.family} needs --n")
            chosen = [(sel.family, sel.n)]
        else:
            chosen = [(sel.family,)]
    return chosen


def _dom_id(key: tuple) -> str:
    return key[0] + ("_" + "_".join(str(x) for x in key[1:]) if len(key) > 1 else "")


# ---------------------------------------------------------------------------
# individual checks


def _timed(fn: Callable[[], tuple[str, str, bool]]) -> tuple[str, str, bool, int]:
    t0 = time.perf_counter()
    expected, computed, ok = fn()
    return expected, computed, ok, int(round((time.perf_counter() - t0) * 1000))


def _record(cid, key, k, fn) -> CheckRecord:
    expected, computed, ok, ms = _timed(fn)
    family = key[0] if key else None
    params = list(key[1:]) if key else []
    return CheckRecord(cid, family, params, k, expected, computed, ok, ms)


def check_tables(sel: Selection) -> list[CheckRecord]:
    out = []
    t0 = time.perf_counter()
    results = check_golden_tables(sel.golden)
    ms = int(round((time.perf_counter() - t0) * 1000))
    for r in results:
        problems = []
        if r.missing:
            problems.append(f"missing {r.missing}")
        if r.extra:
            problems.append(f"not weights {r.extra}")
        if r.duplicates:
            problems.append(f"duplicated {r.duplicates}")
        if r.nontrivial_multiplicities:
            problems.append(f"multiplicities {r.nontrivial_multiplicities}")
        computed = f"{r.matched} matched" + ("; " + "; ".join(problems) if problems else "")
        out.append(
            CheckRecord(f"tables/{r.family}", r.family, [], None, f"{r.expected_size} matched", computed, r.passed, ms)
        )
    return out


def check_bound(sel: Selection) -> list[CheckRecord]:
    out = []
    for key in _select(bound_domains(), sel):
        spec = catalog(*key)

        def run(spec=spec):
            value = verify_weight_bound(spec)
            return "1", str(value), value == 1

        out.append(_record(f"bound/{_dom_id(key)}", key, None, run))
    return out


def check_generating(sel: Selection) -> list[CheckRecord]:
    out = []
    for key in _select(generating_domains(), sel):
        spec = catalog(*key)
        for k in range(2, spec.rank + 2):

            def run(spec=spec, k=k):
                rep = generating_check(spec, k)
                ok = rep.contained and rep.exact()
                if spec.schur is not None:
                    ok = ok and all(w is not None for w in rep.witnesses.values())
                computed = "contained" if rep.contained else "missing " + ", ".join(map(str, rep.missing))
                if not rep.exact():
                    computed += "; S^k != J_k + I_k"
                return "contained", computed, ok

            out.append(_record(f"generating/{_dom_id(key)}/k{k}", key, k, run))
    return out


def check_higgs(sel: Selection) -> list[CheckRecord]:
    if sel.p is not None or sel.q is not None:
        shapes = [(sel.p or 2, sel.q or 2)]
    else:
        shapes = [(2, 2), (2, 3), (3, 3)]
    out = []
    for p, q in shapes:

        def run(p=p, q=q):
            sw = higgs_sweep(p, q, sel.samples, sel.seed)
            computed = f"{sw.checked} checked, {len(sw.failures)} failures"
            if sw.failures:
                computed += f"; first {sw.failures[0]}"
            return f"{sw.checked} checked, 0 failures", computed, sw.passed

        out.append(_record(f"higgs/{p}x{q}", ("I", p, q), None, run))
    return out


def check_strata(sel: Selection) -> list[CheckRecord]:
    ns = [sel.n] if sel.n is not None else [2, 3, 4]
    out = []
    for n in ns:
        for k in range(1, n):

            def run(n=n, k=k):
                d = strata_dimension_typeA(n, k)
                return str((2 * n - k) * k), str(d), d == (2 * n - k) * k

            out.append(_record(f"strata/n{n}/k{k}", ("I", n, n), k, run))
    return out


def _identity_domains(sel: Selection) -> list[tuple]:
    doms = [("I", p, q) for q in range(1, 5) for p in range(1, q + 1)]
    doms += [("III", n) for n in range(2, 5)]
    doms += [("II", n) for n in range(3, 7)]
    doms += [("IV", n) for n in (5, 6, 7)]
    doms += [("V",), ("VI",)]
    return _select(doms, sel)


def check_identity_records(sel: Selection) -> list[CheckRecord]:
    out = []
    for key in _identity_domains(sel):
        spec = catalog(*key)
        if spec.schur is not None:
            # closed-form Schur route against plethysm of characters
            for k in range(1, 5):

                def run(spec=spec, k=k):
                    expected, computed = sym_tangent(spec, k), sym_tangent_characters(spec, k)
                    return str(expected), str(computed), expected == computed

                out.append(_record(f"identities/{_dom_id(key)}/S{k}", key, k, run))
            continue
        t0 = time.perf_counter()
        results = check_identities(spec)
        ms = int(round((time.perf_counter() - t0) * 1000))
        for r in results:
            computed = str(r.computed)
            if not r.passed:
                diffs = "; ".join(f"{lab}: recorded {a}, computed {b}" for lab, (a, b) in r.discrepancies().items())
                computed += f" [{diffs}]"
            out.append(CheckRecord(f"identities/{_dom_id(key)}/{r.quantity}", key[0], list(key[1:]), None,
                                   str(r.recorded), computed, r.passed, ms))
    return out


def structural_problems(spec: DomainSpec, max_k: int | None = None) -> list[str]:
    """Exactness, nilpotency, Calabi-Yau shape and dimension identities."""
    problems = []
    top = spec.rank + 1 if max_k is None else max_k
    if weyl_dimension(spec.ambient, spec.hodge.levels[0]) != 1:
        problems.append("level 0 is not one-dimensional")
    if kernel_I_k(spec, 1):
        problems.append(f"I_1 = {kernel_I_k(spec, 1)} is not empty")
    for k in range(0, top + 1):
        s = sym_tangent(spec, k)
        j, i = image_J_k(spec, k), kernel_I_k(spec, k)
        if j + i != s:
            problems.append(f"S^{k} != J_{k} + I_{k}")
        if k > spec.rank and j:
            problems.append(f"J_{k} = {j} is not empty")
        if k <= spec.rank and len(j) != 1:
            problems.append(f"J_{k} is not irreducible")
        if s.dimension(spec.ambient) != expected_sym_dimension(spec, k):
            problems.append(f"dim S^{k} = {s.dimension(spec.ambient)}, expected {expected_sym_dimension(spec, k)}")
        if any(lab.charge != 2 * k for lab in s.labels()):
            problems.append(f"S^{k} has a component of charge != {2 * k}")
    return problems


def check_invariants(sel: Selection) -> list[CheckRecord]:
    out = []
    for key in _select(bound_domains(), sel):
        spec = catalog(*key)

        def run(spec=spec):
            problems = structural_problems(spec)
            return "no violations", "; ".join(problems) or "no violations", not problems

        out.append(_record(f"invariants/{_dom_id(key)}", key, None, run))
    return out


RUNNERS = {
    "tables": check_tables,
    "bound": check_bound,
    "generating": check_generating,
    "higgs": check_higgs,
    "strata": check_strata,
    "identities": check_identity_records,
    "invariants": check_invariants,
}


# ---------------------------------------------------------------------------
# reports


def run_checks(sections: Iterable[str], sel: Selection | None = None) -> list[CheckRecord]:
    sel = sel or Selection()
    records: list[CheckRecord] = []
    for name in sections:
        records.extend(RUNNERS[name](sel))
    return sorted(records, key=lambda r: r.id)


def report_dict(records: list[CheckRecord], *, timing: bool = True) -> dict:
    checks = []
    for r in records:
        d = r.as_json()
        if not timing:
            d["ms"] = 0
        checks.append(d)
    return {"version": REPORT_VERSION, "checks": checks, "pass": all(r.passed for r in records)}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def format_table(records: list[CheckRecord]) -> str:
    width = max((len(r.id) for r in records), default=10)
    lines = []
    for r in records:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.id:<{width}}  {r.ms:>6} ms  {r.computed}"
        if not r.passed:
            line += f"  (expected {r.expected})"
        lines.append(line)
    failed = sum(not r.passed for r in records)
    lines.append(f"{len(records) - failed}/{len(records)} checks passed")
    return "\n".join(lines) + "\n"
