"""Irreducible bounded symmetric domains and the graded kernel ideal of the Higgs field.

For a domain D = G/K the tangent space at the origin is a K-representation
T, and the canonical variation of Hodge structure gives Hodge levels
E^{n-i,i} (i = 0..n, n = rank).  The k-th iterated Higgs field maps
S^k(T) onto J_k = Hom(E^{n,0}, E^{n-k,k}); its kernel is I_k.  Everything is
computed as K-representations: labels of the semisimple part K' together
with the U(1) charge (charge 2i - n on the i-th Hodge level, so J_k and
every component of S^k(T) carry charge 2k).

Classical families are handled through Schur functors of the defining
representations (Cauchy / plethysm rules, Littlewood-Richardson products);
type IV and the exceptional domains go through weight multisets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from itertools import product as cartesian
from math import comb

import numpy as np

from .repchar import (
    Decomposition,
    IrrepLabel,
    decompose,
    symmetric_power,
    tensor_product,
    weight_system,
    weyl_dimension,
)
from .rootsys import (
    RootSystem,
    build_root_system,
    product_system,
    strongly_orthogonal_cascade,
)
from .schur import (
    Partition,
    as_partition,
    cauchy_sym,
    conjugate,
    lr_coefficients,
    partition_to_label,
    sym_of_ext,
    sym_of_sym,
)

DOMAIN_FAMILIES = ("I", "II", "III", "IV", "V", "VI")
WEIGHT_BOUND_GUARD = 10_000


class DomainError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (e.g. J_k is not a summand of S^k(T))."""


@dataclass(frozen=True)
class SchurModel:
    """How tuples of partitions map to labels of the isotropy algebra.

    ``dims[f]`` is the dimension of the defining representation V_f of the
    f-th gl factor; ``dual[f]`` says V_f is the dual of the standard one.
    """

    dims: tuple[int, ...]
    dual: tuple[bool, ...]
    kind: str  # "cauchy" | "sym2" | "ext2"

    def label(self, parts: tuple[Partition, ...], charge: int) -> IrrepLabel | None:
        coords: tuple[int, ...] = ()
        for lam, m, d in zip(parts, self.dims, self.dual):
            lab = partition_to_label(lam, m, dual=d)
            if lab is None:
                return None
            coords += lab
        return IrrepLabel(charge, coords)

    def rows_bound(self) -> int:
        return min(self.dims)


@dataclass(frozen=True)
class HodgeGrading:
    """K-representations of E^{n-i,i}, i = 0..n, each with its charge."""

    levels: tuple[IrrepLabel, ...]
    partitions: tuple[tuple[Partition, ...], ...] | None = None

    def __len__(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class DomainSpec:
    family: str
    params: tuple[int, ...]
    rank: int
    dimension: int
    ambient: RootSystem
    tangent: IrrepLabel
    group: RootSystem
    special_node: int
    hodge: HodgeGrading
    schur: SchurModel | None = field(default=None, compare=False)

    @property
    def pvhs_weight(self) -> int:
        return self.rank

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I_{self.params[0]},{self.params[1]}"
        if self.params:
            return f"{self.family}_{self.params[0]}"
        return self.family

    def __str__(self) -> str:
        return self.name


# ---------------------------------------------------------------------------
# catalog


def _rs_for_so(n: int) -> tuple[RootSystem, tuple[int, ...]]:
    """Root system of so(n) with the label of its vector representation."""
    if n == 3:
        return build_root_system("A", 1), (2,)
    if n == 4:
        a1 = build_root_system("A", 1)
        return product_system(a1, a1), (1, 1)
    m = n // 2
    rs = build_root_system("B" if n % 2 else "D", m)
    return rs, (1,) + (0,) * (m - 1)


def _sl(m: int) -> RootSystem | None:
    return build_root_system("A", m - 1) if m >= 2 else None


def _levels(labels, rank) -> tuple[IrrepLabel, ...]:
    return tuple(IrrepLabel.of(c, 2 * i - rank) for i, c in enumerate(labels))


@lru_cache(maxsize=None)
def catalog(family: str, *params: int) -> DomainSpec:
    """Domain data, e.g. ``catalog("I", 2, 3)``, ``catalog("IV", 7)``, ``catalog("VI")``."""
    if family not in DOMAIN_FAMILIES:
        raise DomainError(f"unknown domain family {family!r}; expected one of {DOMAIN_FAMILIES}")
    params = tuple(int(x) for x in params)

    if family == "I":
        if len(params) != 2 or min(params) < 1:
            raise DomainError("type I needs p, q >= 1")
        p, q = params
        rank = min(p, q)
        factors = [s for s in (_sl(p), _sl(q)) if s is not None]
        ambient = product_system(*factors)
        model = SchurModel(dims=(p, q), dual=(True, True), kind="cauchy")
        parts = tuple(((1,) * i, (1,) * i) for i in range(rank + 1))
        group = build_root_system("A", p + q - 1)
        node = p
    elif family == "II":
        if len(params) != 1 or params[0] < 3:
            raise DomainError("type II needs n >= 3")
        (n,) = params
        rank = n // 2
        ambient = _sl(n)
        model = SchurModel(dims=(n,), dual=(True,), kind="ext2")
        parts = tuple((((1,) * (2 * i)),) for i in range(rank + 1))
        group = build_root_system("D", n)
        node = n
    elif family == "III":
        if len(params) != 1 or params[0] < 2:
            raise DomainError("type III needs n >= 2")
        (n,) = params
        rank = n
        ambient = _sl(n)
        model = SchurModel(dims=(n,), dual=(False,), kind="sym2")
        parts = tuple((((2,) * i),) for i in range(rank + 1))
        group = build_root_system("C", n)
        node = n
    else:
        model = None
        parts = None
        if family == "IV":
            if len(params) != 1 or params[0] < 3:
                raise DomainError("type IV needs n >= 3")
            (n,) = params
            rank = 2
            ambient, vec = _rs_for_so(n)
            zero = (0,) * ambient.rank
            levels = _levels([zero, vec, zero], rank)
            group = build_root_system("B", (n + 1) // 2) if n % 2 else build_root_system("D", (n + 2) // 2)
            node = 1
        elif family == "V":
            if params:
                raise DomainError("type V takes no parameters")
            rank = 2
            ambient = build_root_system("D", 5)
            levels = _levels([(0, 0, 0, 0, 0), (0, 0, 0, 1, 0), (1, 0, 0, 0, 0)], rank)
            group = build_root_system("E6", 6)
            node = 1
        else:
            if params:
                raise DomainError("type VI takes no parameters")
            rank = 3
            ambient = build_root_system("E6", 6)
            levels = _levels(
                [(0,) * 6, (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1), (0,) * 6], rank
            )
            group = build_root_system("E7", 7)
            node = 7

    if model is not None:
        levels = tuple(model.label(pt, 2 * i - rank) for i, pt in enumerate(parts))
        if any(x is None for x in levels):  # pragma: no cover - rank bounds guarantee this
            raise ConsistencyError("a Hodge level vanished")
    hodge = HodgeGrading(levels=levels, partitions=parts)
    tangent = IrrepLabel(2, levels[1].coords)
    dimension = weyl_dimension(ambient, tangent)
    return DomainSpec(
        family=family,
        params=params,
        rank=rank,
        dimension=dimension,
        ambient=ambient,
        tangent=tangent,
        group=group,
        special_node=node,
        hodge=hodge,
        schur=model,
    )


# ---------------------------------------------------------------------------
# S^k(T), J_k, I_k


def _schur_sym(spec: DomainSpec, k: int) -> Counter:
    """S^k(T) as a multiset of partition tuples (classical families)."""
    model = spec.schur
    if model.kind == "cauchy":
        p, q = model.dims
        return Counter((lam, lam) for lam in cauchy_sym(k, min(p, q), max(p, q)))
    (n,) = model.dims
    lams = sym_of_sym(k, n) if model.kind == "sym2" else sym_of_ext(k, n)
    return Counter((lam,) for lam in lams)


def _schur_to_decomposition(spec: DomainSpec, parts: Counter, charge: int) -> Decomposition:
    out: Counter = Counter()
    for pt, m in parts.items():
        label = spec.schur.label(pt, charge)
        if label is not None:
            out[label] += m
    return Decomposition(out)


def sym_tangent_partitions(spec: DomainSpec, k: int) -> list[tuple[tuple[Partition, ...], IrrepLabel]]:
    """Schur-functor labels of S^k(T) paired with their highest weights (classical families)."""
    if spec.schur is None:
        raise DomainError(f"{spec.name} has no Schur-functor model")
    out = []
    for pt in sorted(_schur_sym(spec, k), reverse=True):
        label = spec.schur.label(pt, 2 * k)
        if label is not None:
            out.append((pt, label))
    return out


@lru_cache(maxsize=None)
def _sym_tangent_cached(spec: DomainSpec, k: int) -> Decomposition:
    if spec.schur is not None:
        return _schur_to_decomposition(spec, _schur_sym(spec, k), 2 * k)
    return decompose(symmetric_power(weight_system(spec.ambient, spec.tangent), k))


def sym_tangent(spec: DomainSpec, k: int) -> Decomposition:
    """Irreducible decomposition of S^k(T); every component has charge 2k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _sym_tangent_cached(spec, k)


def sym_tangent_characters(spec: DomainSpec, k: int) -> Decomposition:
    """S^k(T) by plethysm on characters and decomposition, for every family."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return decompose(symmetric_power(weight_system(spec.ambient, spec.tangent), k))


def _schur_image(spec: DomainSpec, k: int) -> Counter:
    if k > spec.rank:
        return Counter()
    return Counter({spec.hodge.partitions[k]: 1})


def image_J_k(spec: DomainSpec, k: int) -> Decomposition:
    """J_k = Hom(E^{n,0}, E^{n-k,k}) as a summand of S^k(T); empty for k > rank."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > spec.rank:
        return Decomposition()
    top, target = spec.hodge.levels[0], spec.hodge.levels[k]
    if weyl_dimension(spec.ambient, top) != 1:
        raise ConsistencyError(f"{spec}: top Hodge level is not one-dimensional")
    image = Decomposition.of(IrrepLabel(target.charge - top.charge, target.coords))
    if not image.issubset(sym_tangent(spec, k)):
        raise ConsistencyError(f"{spec}: J_{k} = {image} is not a summand of S^{k}(T) = {sym_tangent(spec, k)}")
    return image


def kernel_I_k(spec: DomainSpec, k: int) -> Decomposition:
    return sym_tangent(spec, k) - image_J_k(spec, k)


# ---------------------------------------------------------------------------
# generating property


@dataclass
class GradedIdealReport:
    spec: DomainSpec
    k: int
    sym_k: Decomposition
    j_k: Decomposition
    i_k: Decomposition
    product: Decomposition
    contained: bool
    missing: list[IrrepLabel]
    witnesses: dict[IrrepLabel, dict]

    def exact(self) -> bool:
        return self.j_k + self.i_k == self.sym_k


def _lr_tuple(a: tuple[Partition, ...], b: tuple[Partition, ...], dims) -> Counter:
    per_factor = [lr_coefficients(x, y, m) for x, y, m in zip(a, b, dims)]
    out: Counter = Counter()
    for combo in cartesian(*(f.items() for f in per_factor)):
        mult = 1
        for _, c in combo:
            mult *= c
        out[tuple(nu for nu, _ in combo)] += mult
    return out


def _classical_generation(spec: DomainSpec, k: int):
    model = spec.schur
    sym_k = _schur_sym(spec, k)
    i_k = sym_k - _schur_image(spec, k)
    i_2 = _schur_sym(spec, 2) - _schur_image(spec, 2)
    s_rest = _schur_sym(spec, k - 2)
    prod: Counter = Counter()
    for a, ma in i_2.items():
        for b, mb in s_rest.items():
            for nu, c in _lr_tuple(a, b, model.dims).items():
                prod[nu] += ma * mb * c
    witnesses = {}
    for lam in i_k:
        w = _classical_witness(spec, lam, k, i_2, s_rest)
        if w is not None:
            witnesses[lam] = w
    return i_k, prod, witnesses


def _minus(lam: Partition, rows: dict[int, int]) -> Partition | None:
    parts = list(lam)
    for i, d in rows.items():
        if i >= len(parts):
            return None
        parts[i] -= d
    if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        return None
    return as_partition(parts)


def _rule_candidates(spec: DomainSpec, lam: Partition):
    """Constructive choices of mu from the case analysis for each classical family."""
    kind = spec.schur.kind
    if kind == "cauchy":
        p = min(spec.schur.dims)
        padded = list(lam) + [0] * (p + 1 - len(lam))
        for i0 in range(p - 1):
            if padded[i0] > padded[i0 + 1] >= 1:
                yield "rows i0,i0+1", _minus(lam, {i0: 1, i0 + 1: 1})
        for i0 in range(p):
            if padded[0] >= 2 and all(padded[j] == padded[0] for j in range(i0 + 1)) and padded[i0] > padded[i0 + 1]:
                yield "row i0", _minus(lam, {i0: 2})
        # general horizontal 2-strip: one box off each of two corners, or two off one row
        corners = [i for i in range(len(lam)) if padded[i] > padded[i + 1]]
        for a, b in combinations(corners, 2):
            yield "corners i,j", _minus(lam, {a: 1, b: 1})
        for i in corners:
            if padded[i] - padded[i + 1] >= 2:
                yield "row i", _minus(lam, {i: 2})
    elif kind == "sym2":
        last = len(lam) - 1
        s = max((i for i in range(last) if lam[i] > lam[last]), default=None)
        if s is not None:
            yield "rows s,l", _minus(lam, {s: 2, last: 2})
        else:
            yield "row l", _minus(lam, {last: 4})
    else:
        cols = conjugate(lam)
        last = len(cols) - 1
        s = max((i for i in range(last) if cols[i] > cols[last]), default=None)
        if s is not None:
            mu_c = _minus(cols, {s: 2, last: 2})
            yield "columns s,l", None if mu_c is None else conjugate(mu_c)
        elif len(cols) >= 2:
            rows = len(lam)
            yield "corner square", _minus(lam, {rows - 2: 2, rows - 1: 2})


def _classical_witness(spec: DomainSpec, lam_t, k: int, i_2: Counter, s_rest: Counter) -> dict | None:
    """A mu in S^{k-2}(T) and a component of I_2 whose product contains lam."""
    dims = spec.schur.dims
    lam = lam_t[0]
    for rule, mu in _rule_candidates(spec, lam):
        if mu is None:
            continue
        mu_t = tuple(mu for _ in dims)
        if mu_t not in s_rest:
            continue
        for a in i_2:
            if _lr_tuple(a, mu_t, dims).get(lam_t, 0) > 0:
                return {"mu": mu, "i2": a[0], "rule": rule}
    for mu_t in sorted(s_rest, reverse=True):
        for a in i_2:
            if _lr_tuple(a, mu_t, dims).get(lam_t, 0) > 0:
                return {"mu": mu_t[0], "i2": a[0], "rule": "search"}
    return None


def generating_check(spec: DomainSpec, k: int) -> GradedIdealReport:
    """Does every irreducible of I_k occur in I_2 (x) S^{k-2}(T)?"""
    if k < 2:
        raise ValueError("the generating check starts at k = 2")
    sym_k = sym_tangent(spec, k)
    j_k = image_J_k(spec, k)
    i_k = sym_k - j_k
    witnesses: dict[IrrepLabel, dict] = {}
    if spec.schur is not None:
        i_parts, prod_parts, raw = _classical_generation(spec, k)
        product = _schur_to_decomposition(spec, prod_parts, 2 * k)
        if _schur_to_decomposition(spec, i_parts, 2 * k) != i_k:
            raise ConsistencyError(f"{spec}: Schur-level I_{k} disagrees with the label-level one")
        for pt, w in raw.items():
            witnesses[spec.schur.label(pt, 2 * k)] = w
    else:
        i_2 = kernel_I_k(spec, 2)
        s_rest = sym_tangent(spec, k - 2)
        product = Decomposition()
        for a, ma in i_2:
            for b, mb in s_rest:
                part = tensor_product(spec.ambient, a, b)
                product = product + Decomposition({lab: m * ma * mb for lab, m in part})
                for lab in part.labels():
                    if lab in i_k.components and lab not in witnesses:
                        witnesses[lab] = {"i2": a, "factor": b}
    missing = [lab for lab in i_k.labels() if lab not in product.components]
    return GradedIdealReport(
        spec=spec,
        k=k,
        sym_k=sym_k,
        j_k=j_k,
        i_k=i_k,
        product=product,
        contained=not missing,
        missing=missing,
        witnesses=witnesses,
    )


# ---------------------------------------------------------------------------
# weight bound along strongly orthogonal roots


def canonical_representation(spec: DomainSpec) -> IrrepLabel:
    """Fundamental representation of G attached to the special node."""
    coords = [0] * spec.group.rank
    coords[spec.special_node - 1] = 1
    return IrrepLabel.of(coords)


def _pairing_values(rs: RootSystem, coords: np.ndarray, root) -> list[Fraction]:
    # beta(H_alpha) = sum_j c_j b_j d_j * 2 / (alpha, alpha)
    norm = rs.root_inner(root, root)
    weights = [Fraction(2 * c) * rs.symmetrizer[j] / norm for j, c in enumerate(root)]
    return [sum((w * int(b) for w, b in zip(weights, row) if w), Fraction(0)) for row in coords.tolist()]


def designated_roots(spec: DomainSpec) -> dict[str, tuple[int, ...]]:
    roots = {"highest": spec.group.highest_root}
    if spec.family == "VI":
        roots["alpha7"] = (0, 0, 0, 0, 0, 0, 1)
    return roots


def weight_bound_details(spec: DomainSpec) -> dict[str, Fraction]:
    """max |beta(H_psi)| over the weights of W, per designated root and per cascade root."""
    W = canonical_representation(spec)
    dim = weyl_dimension(spec.group, W)
    if dim > WEIGHT_BOUND_GUARD:
        raise DomainError(f"{spec}: canonical representation has dimension {dim} > {WEIGHT_BOUND_GUARD}")
    ws = weight_system(spec.group, W)
    out = {}
    for name, root in designated_roots(spec).items():
        out[name] = max(abs(v) for v in _pairing_values(spec.group, ws.coords, root))
    for i, root in enumerate(strongly_orthogonal_cascade(spec.group, spec.special_node), start=1):
        out[f"psi{i}"] = max(abs(v) for v in _pairing_values(spec.group, ws.coords, root))
    return out


def verify_weight_bound(spec: DomainSpec) -> Fraction:
    """max |beta(H_psi)| over all weights beta of W and the designated roots psi."""
    details = weight_bound_details(spec)
    return max(details[name] for name in designated_roots(spec))


def noncompact_roots(spec: DomainSpec) -> list[tuple[int, ...]]:
    k = spec.special_node - 1
    return [r for r in spec.group.positive_roots if r[k] == 1]


# ---------------------------------------------------------------------------
# type A rank strata


def strata_dimension_typeA(n: int, k: int) -> int:
    """Dimension of {rank <= k} in M_{n,n} from the Jacobian of its (k+1)-minors.

    The Jacobian is evaluated at diag(1,...,1,0,...,0) with k ones, a smooth
    point of the determinantal variety; the dimension is n^2 minus its rank.
    """
    from itertools import combinations

    from .exact import det, rank

    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    point = [[int(i == j and i < k) for j in range(n)] for i in range(n)]
    rows = []
    for R in combinations(range(n), k + 1):
        for C in combinations(range(n), k + 1):
            grad = [0] * (n * n)
            for ia, a in enumerate(R):
                for ib, b in enumerate(C):
                    sub = [[point[r][c] for c in C if c != b] for r in R if r != a]
                    grad[a * n + b] = (-1) ** (ia + ib) * det(sub)
            rows.append(grad)
    return n * n - (rank(rows) if rows else 0)


def expected_sym_dimension(spec: DomainSpec, k: int) -> int:
    return comb(spec.dimension + k - 1, k)
