"""Characters of finite-dimensional irreducibles and their arithmetic.

A character is a :class:`WeightMultiset`: integer weight rows (fundamental
coordinates plus a U(1) charge column) with integer multiplicities.  The
charge never enters root-system arithmetic; it only adds under tensor
products and scales under Adams operations.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import _accel
from .rootsys import RootSystem, Weight, orbit_array


class NotACharacterError(ValueError):
    """Raised when a virtual character has a negative irreducible multiplicity."""

    def __init__(self, weight: "IrrepLabel", multiplicity: int):
        self.weight = weight
        self.multiplicity = multiplicity
        super().__init__(f"not a true character: {weight} would occur with multiplicity {multiplicity}")


@dataclass(frozen=True, order=True)
class IrrepLabel:
    charge: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coords):
            raise ValueError(f"highest weight {self.coords} is not dominant")

    @classmethod
    def of(cls, coords, charge: int = 0) -> "IrrepLabel":
        return cls(int(charge), tuple(int(c) for c in coords))

    @property
    def highest_weight(self) -> Weight:
        return Weight(self.charge, self.coords)

    def __str__(self) -> str:
        g = "G(" + ",".join(str(c) for c in self.coords) + ")"
        return g if self.charge == 0 else f"C({self.charge})x{g}"


# ---------------------------------------------------------------------------
# weight multisets


class WeightMultiset:
    """Multiset of weights of a (virtual) representation.

    ``rows`` has shape (n, rank + 1); the last column is the charge.  Rows
    are kept unique, sorted by (charge, coords), with nonzero multiplicity.
    """

    __slots__ = ("rs", "rows", "mults")

    def __init__(self, rs: RootSystem, rows, mults, *, canonical: bool = False):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, rs.rank + 1)
        mults = np.asarray(mults, dtype=np.int64).reshape(-1)
        if not canonical:
            rows, mults = _canonical(rows, mults)
        self.rs = rs
        self.rows = rows
        self.mults = mults

    # -- constructors ------------------------------------------------------------

    @classmethod
    def from_dict(cls, rs: RootSystem, entries: dict) -> "WeightMultiset":
        rows = [list(w.coords) + [w.charge] for w in entries]
        return cls(rs, np.array(rows, dtype=np.int64).reshape(-1, rs.rank + 1), list(entries.values()))

    @classmethod
    def trivial(cls, rs: RootSystem, charge: int = 0) -> "WeightMultiset":
        row = np.zeros((1, rs.rank + 1), dtype=np.int64)
        row[0, -1] = charge
        return cls(rs, row, [1], canonical=True)

    @classmethod
    def zero(cls, rs: RootSystem) -> "WeightMultiset":
        return cls(rs, np.zeros((0, rs.rank + 1), dtype=np.int64), [], canonical=True)

    # -- views -------------------------------------------------------------------

    @property
    def coords(self) -> np.ndarray:
        return self.rows[:, :-1]

    @property
    def charges(self) -> np.ndarray:
        return self.rows[:, -1]

    @property
    def entries(self) -> dict[Weight, int]:
        return {Weight(int(r[-1]), tuple(r[:-1])): int(m) for r, m in zip(self.rows.tolist(), self.mults.tolist())}

    def items(self):
        return self.entries.items()

    def __len__(self) -> int:
        return self.rows.shape[0]

    def total(self) -> int:
        return int(self.mults.sum())

    dim = total

    def __getitem__(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def dominant(self) -> "WeightMultiset":
        mask = np.all(self.coords >= 0, axis=1)
        return WeightMultiset(self.rs, self.rows[mask], self.mults[mask], canonical=True)

    def is_weyl_invariant(self) -> bool:
        table = self.entries
        for i in range(1, self.rs.rank + 1):
            col = self.rs.cartan[:, i - 1]
            for w, m in table.items():
                b = w.coords[i - 1]
                if b:
                    img = Weight(w.charge, tuple(c - b * int(a) for c, a in zip(w.coords, col)))
                    if table.get(img, 0) != m:
                        return False
        return True

    # -- arithmetic --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return (
            self.rs == other.rs
            and np.array_equal(self.rows, other.rows)
            and np.array_equal(self.mults, other.mults)
        )

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        _same_ambient(self, other)
        return _merge(self.rs, [self.rows, other.rows], [self.mults, other.mults])

    def __sub__(self, other: "WeightMultiset") -> "WeightMultiset":
        _same_ambient(self, other)
        return _merge(self.rs, [self.rows, other.rows], [self.mults, -other.mults])

    def scaled(self, factor: int) -> "WeightMultiset":
        """Multiply every multiplicity by an integer."""
        if factor == 0:
            return WeightMultiset.zero(self.rs)
        return WeightMultiset(self.rs, self.rows, self.mults * factor, canonical=True)

    def adams(self, i: int) -> "WeightMultiset":
        """psi^i: every weight (and charge) multiplied by i."""
        return WeightMultiset(self.rs, self.rows * i, self.mults, canonical=i > 0)

    def twist(self, charge: int) -> "WeightMultiset":
        rows = self.rows.copy()
        rows[:, -1] += charge
        return WeightMultiset(self.rs, rows, self.mults, canonical=True)

    def __mul__(self, other: "WeightMultiset") -> "WeightMultiset":
        """Character of the tensor product (multiset convolution)."""
        _same_ambient(self, other)
        if len(self) == 0 or len(other) == 0:
            return WeightMultiset.zero(self.rs)
        bound = int(np.abs(self.mults).max()) * int(np.abs(other.mults).sum())
        if bound >= _accel.MAX_KEY:
            raise OverflowError("multiplicities too large for int64 convolution")
        lo_a, hi_a = self.rows.min(axis=0), self.rows.max(axis=0)
        lo_b, hi_b = other.rows.min(axis=0), other.rows.max(axis=0)
        lo, hi = lo_a + lo_b, hi_a + hi_b
        strides = _accel.make_strides(lo, hi)
        ka = _accel.pack(self.rows, lo_a, strides)
        kb = _accel.pack(other.rows, lo_b, strides)
        keys, mults = _accel.convolve_keys(ka, self.mults, kb, other.mults)
        rows = _accel.unpack(keys, lo, strides)
        return WeightMultiset(self.rs, rows, mults)

    def __repr__(self) -> str:
        return f"WeightMultiset({self.rs.name}, {len(self)} weights, mass {self.total()})"


def _same_ambient(a: WeightMultiset, b: WeightMultiset) -> None:
    if a.rs != b.rs:
        raise ValueError(f"characters live on different root systems: {a.rs.name} vs {b.rs.name}")


def _canonical(rows: np.ndarray, mults: np.ndarray):
    if rows.shape[0] == 0:
        return rows, mults
    lo, hi = rows.min(axis=0), rows.max(axis=0)
    strides = _accel.make_strides(lo, hi)
    keys, m = _accel.reduce_keys(_accel.pack(rows, lo, strides), mults)
    return _sort_rows(_accel.unpack(keys, lo, strides), m)


def _sort_rows(rows, mults):
    if rows.shape[0] == 0:
        return rows, mults
    # charge is the primary key, then coords left to right
    order = np.lexsort(tuple(rows[:, c] for c in range(rows.shape[1] - 2, -1, -1)) + (rows[:, -1],))
    return np.ascontiguousarray(rows[order]), np.ascontiguousarray(mults[order])


def _merge(rs, row_list, mult_list) -> WeightMultiset:
    rows = np.concatenate(row_list)
    mults = np.concatenate(mult_list)
    return WeightMultiset(rs, rows, mults)


# ---------------------------------------------------------------------------
# Weyl dimension and Freudenthal


def _label(rs: RootSystem, lam) -> IrrepLabel:
    if isinstance(lam, IrrepLabel):
        label = lam
    elif isinstance(lam, Weight):
        label = IrrepLabel.of(lam.coords, lam.charge)
    else:
        label = IrrepLabel.of(lam)
    if len(label.coords) != rs.rank:
        raise ValueError(f"label {label.coords} has length {len(label.coords)}, rank is {rs.rank}")
    return label


def weyl_dimension(rs: RootSystem, lam) -> int:
    """Dimension of the irreducible with highest weight ``lam`` (Weyl's product formula)."""
    label = _label(rs, lam)
    d = rs.symmetrizer
    num = Fraction(1)
    for alpha in rs.positive_roots:
        top = sum(c * (lj + 1) * d[j] for j, (c, lj) in enumerate(zip(alpha, label.coords)))
        bottom = sum(c * d[j] for j, c in enumerate(alpha))
        num *= Fraction(top) / Fraction(bottom)
    assert num.denominator == 1
    return int(num)


def _dominant_weights_below(rs: RootSystem, lam: tuple[int, ...]) -> np.ndarray:
    roots = rs.positive_roots_weight_basis
    seen = {lam}
    stack = [lam]
    while stack:
        mu = np.array(stack.pop(), dtype=np.int64)
        if roots.shape[0] == 0:
            break
        cand = mu[None, :] - roots
        for row in cand[np.all(cand >= 0, axis=1)].tolist():
            t = tuple(row)
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return np.array(sorted(seen), dtype=np.int64).reshape(-1, rs.rank)


_cache_lock = threading.Lock()
_ws_cache: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}


def clear_caches() -> None:
    """Forget memoised weight systems (used when switching kernel back ends)."""
    with _cache_lock:
        _ws_cache.clear()


def _weight_system_arrays(rs: RootSystem, lam: tuple[int, ...]):
    key = (rs.factors, lam)
    with _cache_lock:
        hit = _ws_cache.get(key)
    if hit is not None:
        return hit
    if rs.rank == 0:
        result = (np.zeros((1, 0), dtype=np.int64), np.ones(1, dtype=np.int64))
    else:
        dom = _dominant_weights_below(rs, lam)
        weights = orbit_array(rs, dom)
        h = rs.heights(weights)
        order = np.lexsort(tuple(weights[:, c] for c in range(rs.rank - 1, -1, -1)) + (-h,))
        weights = np.ascontiguousarray(weights[order])
        lo, hi = weights.min(axis=0), weights.max(axis=0)
        strides = _accel.make_strides(lo, hi)
        keys = _accel.pack(weights, lo, strides)
        G = rs.gram_weights
        lr = np.array(lam, dtype=np.int64) + 1
        mults = _accel.freudenthal(
            weights, keys, lo, strides, hi, rs.positive_roots_weight_basis, G, int(lr @ G @ lr)
        )
        result = (weights, mults)
    with _cache_lock:
        _ws_cache.setdefault(key, result)
    return result


def weight_system(rs: RootSystem, lam) -> WeightMultiset:
    """All weights of the irreducible ``lam`` with Freudenthal multiplicities."""
    label = _label(rs, lam)
    weights, mults = _weight_system_arrays(rs, label.coords)
    rows = np.hstack([weights, np.full((weights.shape[0], 1), label.charge, dtype=np.int64)])
    rows, mults = _sort_rows(rows, mults)
    return WeightMultiset(rs, rows, mults, canonical=True)


def _dominant_part(rs: RootSystem, coords: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    weights, mults = _weight_system_arrays(rs, coords)
    mask = np.all(weights >= 0, axis=1)
    return {tuple(w): int(m) for w, m in zip(weights[mask].tolist(), mults[mask].tolist())}


# ---------------------------------------------------------------------------
# decompositions


class Decomposition:
    """A finite multiset of irreducible labels with positive multiplicities."""

    __slots__ = ("components",)

    def __init__(self, components=None):
        counts = Counter()
        for label, m in dict(components or {}).items():
            if m:
                counts[label] += m
        if any(m < 0 for m in counts.values()):
            raise ValueError("decomposition multiplicities must be nonnegative")
        self.components: dict[IrrepLabel, int] = {k: counts[k] for k in sorted(counts) if counts[k]}

    @classmethod
    def of(cls, *labels: IrrepLabel) -> "Decomposition":
        return cls(Counter(labels))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.components == other.components

    def __iter__(self):
        return iter(self.components.items())

    def __len__(self) -> int:
        return sum(self.components.values())

    def __contains__(self, label) -> bool:
        return label in self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def labels(self) -> list[IrrepLabel]:
        return list(self.components)

    def multiplicity(self, label: IrrepLabel) -> int:
        return self.components.get(label, 0)

    def __add__(self, other: "Decomposition") -> "Decomposition":
        return Decomposition(Counter(self.components) + Counter(other.components))

    def __sub__(self, other: "Decomposition") -> "Decomposition":
        out = Counter(self.components)
        for k, m in other.components.items():
            if out[k] < m:
                raise ValueError(f"cannot remove {m} x {k}: only {out[k]} present")
            out[k] -= m
        return Decomposition(out)

    def issubset(self, other: "Decomposition") -> bool:
        return all(other.multiplicity(k) >= m for k, m in self.components.items())

    def dimension(self, rs: RootSystem) -> int:
        return sum(m * weyl_dimension(rs, k) for k, m in self.components.items())

    def character(self, rs: RootSystem) -> WeightMultiset:
        total = WeightMultiset.zero(rs)
        for k, m in self.components.items():
            total = total + weight_system(rs, k).scaled(m)
        return total

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return " + ".join(str(k) if m == 1 else f"{m}*{k}" for k, m in self.components.items())

    def __repr__(self) -> str:
        return f"Decomposition({self})"


def decompose(ws: WeightMultiset, *, check: bool = False) -> Decomposition:
    """Split a Weyl-invariant character into irreducibles.

    Works on the dominant weights only: the dominant weight of greatest height
    must be a highest weight; its irreducible is subtracted and the loop
    repeats.  With ``check=True`` the full character is rebuilt and compared.
    """
    rs = ws.rs
    dom = ws.dominant()
    remaining: dict[tuple[int, ...], int] = {
        tuple(r): int(m) for r, m in zip(dom.rows.tolist(), dom.mults.tolist())
    }
    hmat, _ = rs._height_matrix
    found: Counter = Counter()
    while remaining:
        top = max(remaining, key=lambda r: (int(np.dot(r[:-1], hmat)) if rs.rank else 0, r))
        m = remaining[top]
        label = IrrepLabel(top[-1], top[:-1]) if m > 0 else None
        if m < 0:
            raise NotACharacterError(IrrepLabel(top[-1], top[:-1]), m)
        found[label] += m
        for w, k in _dominant_part(rs, label.coords).items():
            key = w + (label.charge,)
            left = remaining.get(key, 0) - m * k
            if left:
                remaining[key] = left
            else:
                remaining.pop(key, None)
    result = Decomposition(found)
    if check and result.character(rs) != ws:
        raise NotACharacterError(next(iter(result.components)), 0)
    return result


def tensor_product(rs: RootSystem, lam, mu) -> Decomposition:
    a, b = _label(rs, lam), _label(rs, mu)
    return decompose(weight_system(rs, a) * weight_system(rs, b))


def tensor_decompositions(rs: RootSystem, left: Decomposition, right: Decomposition) -> Decomposition:
    """Decomposition of (sum of left) tensor (sum of right)."""
    total = Decomposition()
    for a, ma in left:
        for b, mb in right:
            part = tensor_product(rs, a, b)
            total = total + Decomposition({k: v * ma * mb for k, v in part})
    return total


# ---------------------------------------------------------------------------
# symmetric and exterior powers (Newton identities on weight multisets)


def _power_series(ws: WeightMultiset, k: int, sign: int) -> WeightMultiset:
    rs = ws.rs
    series = [WeightMultiset.trivial(rs)]
    for n in range(1, k + 1):
        acc = WeightMultiset.zero(rs)
        for i in range(1, n + 1):
            term = ws.adams(i) * series[n - i]
            if sign < 0 and i % 2 == 0:
                term = term.scaled(-1)
            acc = acc + term
        if np.any(acc.mults % n):
            raise ArithmeticError(f"Newton identity gave a non-integral degree-{n} term")
        series.append(WeightMultiset(rs, acc.rows, acc.mults // n, canonical=True))
    return series[k]


def symmetric_power(ws: WeightMultiset, k: int) -> WeightMultiset:
    """Character of S^k from h_k = (1/k) sum_i psi^i(ws) h_{k-i}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return WeightMultiset.trivial(ws.rs)
    return _power_series(ws, k, +1)


def exterior_power(ws: WeightMultiset, k: int) -> WeightMultiset:
    """Character of Lambda^k from e_k = (1/k) sum_i (-1)^(i-1) psi^i(ws) e_{k-i}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return WeightMultiset.trivial(ws.rs)
    if k > ws.total():
        return WeightMultiset.zero(ws.rs)
    return _power_series(ws, k, -1)


def expected_sym_dim(dim: int, k: int) -> int:
    return comb(dim + k - 1, k)
