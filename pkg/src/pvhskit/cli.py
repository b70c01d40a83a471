"""Command-line entry point: ``pvhskit {weights,verify,decompose}``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad usage or a
size guard was hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .pvhs import DomainError, catalog, sym_tangent, sym_tangent_partitions
from .repchar import weight_system, weyl_dimension
from .rootsys import FAMILIES, RootSystemError, build_root_system
from .schur import PartitionError
from .verify import SECTIONS, Selection, dumps, format_table, report_dict, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_DEFAULT_RANK = {"E6": 6, "E7": 7}


class UsageError(Exception):
    pass


def _parse_label(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"cannot parse label {text!r}; expected comma-separated integers") from None


def cmd_weights(args) -> int:
    rank = args.rank if args.rank is not None else _DEFAULT_RANK.get(args.algebra)
    if rank is None:
        raise UsageError(f"--rank is required for type {args.algebra}")
    rs = build_root_system(args.algebra, rank)
    if (args.fundamental is None) == (args.label is None):
        raise UsageError("give exactly one of --fundamental or --label")
    if args.fundamental is not None:
        if not 1 <= args.fundamental <= rank:
            raise UsageError(f"--fundamental must lie in 1..{rank}")
        label = tuple(int(i == args.fundamental - 1) for i in range(rank))
    else:
        label = _parse_label(args.label)
        if len(label) != rank or min(label) < 0:
            raise UsageError(f"--label needs {rank} nonnegative entries")
    if weyl_dimension(rs, label) > args.max_dim:
        raise UsageError(f"representation has dimension {weyl_dimension(rs, label)} > --max-dim {args.max_dim}")
    rows = sorted((w.coords, m) for w, m in weight_system(rs, label).items())
    if args.json:
        payload = {"algebra": rs.name, "label": list(label), "weights": [{"weight": list(c), "mult": m} for c, m in rows]}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for coords, m in rows:
            print(f"({','.join(str(c) for c in coords)})  {m}")
        print(f"{len(rows)} weights, dimension {sum(m for _, m in rows)}")
    return EXIT_OK


def _domain_args(args) -> tuple:
    fam = args.family
    if fam == "I":
        if args.p is None or args.q is None:
            raise UsageError("type I needs --p and --q")
        return (fam, args.p, args.q)
    if fam in ("II", "III", "IV"):
        if args.n is None:
            raise UsageError(f"type {fam} needs --n")
        return (fam, args.n)
    return (fam,)


def cmd_decompose(args) -> int:
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    spec = catalog(*_domain_args(args))
    dec = sym_tangent(spec, args.k)
    schur = dict((lab, pt) for pt, lab in sym_tangent_partitions(spec, args.k)) if spec.schur else {}
    if args.json:
        comps = []
        for lab, m in dec:
            entry = {"label": list(lab.coords), "charge": lab.charge, "mult": m, "dim": weyl_dimension(spec.ambient, lab)}
            if lab in schur:
                entry["partitions"] = [list(x) for x in schur[lab]]
            comps.append(entry)
        payload = {"domain": spec.name, "k": args.k, "components": comps}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    print(f"S^{args.k}(T) for {spec.name}:")
    for lab, m in dec:
        extra = ""
        if lab in schur:
            extra = "  " + "x".join("(" + ",".join(map(str, x)) + ")" for x in schur[lab])
        mult = f"{m} * " if m != 1 else ""
        print(f"  {mult}{lab}  dim {weyl_dimension(spec.ambient, lab)}{extra}")
    print(f"total dimension {dec.dimension(spec.ambient)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    sections = [s for s in SECTIONS if getattr(args, s)]
    if not sections:
        sections = list(SECTIONS)
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    sel = Selection(
        family=args.family, p=args.p, q=args.q, n=args.n, samples=args.samples, seed=args.seed, golden=args.golden
    )
    if sel.family is not None and (args.n is not None or args.p is not None and args.q is not None):
        catalog(*_domain_args(args))  # reject impossible domains before running anything
    records = run_checks(sections, sel)
    if args.json:
        sys.stdout.write(dumps(report_dict(records, timing=not args.no_timing)))
    else:
        sys.stdout.write(format_table(records))
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pvhskit", description="Exact Lie-theory checks for bounded symmetric domains.")
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weights", help="list the weights of an irreducible representation")
    w.add_argument("--algebra", required=True, choices=FAMILIES)
    w.add_argument("--rank", type=int)
    w.add_argument("--fundamental", type=int, help="1-based node of a fundamental weight")
    w.add_argument("--label", help="highest weight as comma-separated Dynkin labels")
    w.add_argument("--max-dim", type=int, default=100_000)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_weights)

    def domain_flags(p, required):
        p.add_argument("--family", choices=("I", "II", "III", "IV", "V", "VI"), required=required)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--n", type=int)

    v = sub.add_parser("verify", help="run verification checks (all of them by default)")
    for name in SECTIONS:
        v.add_argument(f"--{name}", action="store_true")
    domain_flags(v, required=False)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--golden", help="path to a weight-table file")
    v.add_argument("--json", action="store_true")
    v.add_argument("--no-timing", action="store_true", help="report ms as 0 for reproducible output")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="decompose S^k of the tangent representation")
    domain_flags(d, required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, RootSystemError, PartitionError, OverflowError, ValueError, FileNotFoundError) as exc:
        print(f"pvhskit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
