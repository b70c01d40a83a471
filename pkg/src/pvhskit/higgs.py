"""Matrix model of the type I_{p,q} Higgs field on E = Lambda^p(C^{p+q}).

Basis vectors of E are p-element subsets of {0, ..., p+q-1}; indices below p
span the positive block C^p_+, the rest the negative block C^q_-.  The
Hodge level of a subset is the number of its indices in the negative block.
A tangent vector v is a q x p matrix C^p_+ -> C^q_-, extended to E as a
derivation; the resulting map raises the level by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import exact

MODEL_GUARD = 10_000


@dataclass(frozen=True)
class WedgeModel:
    p: int
    q: int
    levels: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def level_dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.levels)

    @property
    def top_level(self) -> int:
        return len(self.levels) - 1

    def index(self, level: int) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.levels[level])}


def build_model(p: int, q: int) -> WedgeModel:
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if comb(p + q, p) > MODEL_GUARD:
        raise ValueError(f"Lambda^{p}(C^{p + q}) exceeds the size guard of {MODEL_GUARD}")
    by_level: dict[int, list[tuple[int, ...]]] = {}
    for subset in combinations(range(p + q), p):
        by_level.setdefault(sum(1 for x in subset if x >= p), []).append(subset)
    top = min(p, q)
    return WedgeModel(p, q, tuple(tuple(by_level[i]) for i in range(top + 1)))


def _as_matrix(v, q: int, p: int) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in np.asarray(v, dtype=object).tolist()]
    if len(rows) != q or any(len(r) != p for r in rows):
        raise ValueError(f"tangent matrix must be {q} x {p}")
    return rows


def theta_matrix(model: WedgeModel, v) -> list[np.ndarray]:
    """Matrices of theta_v from level i to level i+1 (object arrays of Fractions)."""
    p, q = model.p, model.q
    vm = _as_matrix(v, q, p)
    maps = []
    for i in range(model.top_level):
        src = model.levels[i]
        dst = model.index(i + 1)
        M = np.full((len(dst), len(src)), Fraction(0), dtype=object)
        for col, subset in enumerate(src):
            members = set(subset)
            for j in subset:
                if j >= p:
                    continue
                for a in range(q):
                    coeff = vm[a][j]
                    x = p + a
                    if not coeff or x in members:
                        continue
                    # moving x from j's slot to its sorted place passes these indices
                    passed = sum(1 for y in subset if j < y < x)
                    image = tuple(sorted((members - {j}) | {x}))
                    M[dst[image], col] += coeff if passed % 2 == 0 else -coeff
        maps.append(M)
    return maps


def iterate_on_top(model: WedgeModel, v, k: int) -> np.ndarray | None:
    """theta_v^k applied to the level-0 basis vector; None once it leaves E."""
    vec = np.array([Fraction(1)], dtype=object)
    maps = theta_matrix(model, v)
    for step in range(k):
        if step >= len(maps):
            return None
        vec = maps[step].dot(vec)
    return vec


def iterated_rank(model: WedgeModel, v, k: int) -> int:
    """Rank of theta_v^k restricted to the (one-dimensional) level 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    vec = iterate_on_top(model, v, k)
    if vec is None:
        return 0
    return int(any(x != 0 for x in vec))


def membership_in_Ik(model: WedgeModel, v, k: int) -> bool:
    """True when v^k lies in the kernel I_k of the k-th iterated Higgs field."""
    return iterated_rank(model, v, k) == 0


def matrix_rank(v) -> int:
    return exact.rank(np.asarray(v, dtype=object).tolist())


def random_rational_matrix(rng: np.random.Generator, q: int, p: int, rank: int, *, bound: int = 9) -> list[list[Fraction]]:
    """A q x p rational matrix of rank at most ``rank`` (a product of two random factors)."""

    def frac():
        return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))

    left = [[frac() for _ in range(rank)] for _ in range(q)]
    right = [[frac() for _ in range(p)] for _ in range(rank)]
    return [[sum((left[a][t] * right[t][j] for t in range(rank)), Fraction(0)) for j in range(p)] for a in range(q)]


@dataclass
class HiggsSweep:
    p: int
    q: int
    seed: int
    samples: int
    checked: int
    failures: list[dict]
    rank_histogram: dict[int, int]

    @property
    def passed(self) -> bool:
        return not self.failures


def higgs_sweep(p: int, q: int, samples: int, seed: int) -> HiggsSweep:
    """Check membership_in_Ik(v, k) <=> rank(v) < k on random rational matrices."""
    rng = np.random.default_rng(seed)
    model = build_model(p, q)
    top = min(p, q)
    failures = []
    hist: dict[int, int] = {}
    checked = 0
    for n in range(samples):
        target = int(rng.integers(0, top + 1))
        v = random_rational_matrix(rng, q, p, target)
        r = matrix_rank(v)
        hist[r] = hist.get(r, 0) + 1
        maps = theta_matrix(model, v)
        vec = np.array([Fraction(1)], dtype=object)
        for k in range(1, top + 2):
            if k - 1 < len(maps):
                vec = maps[k - 1].dot(vec)
                inside = not any(x != 0 for x in vec)
            else:
                inside = True
            checked += 1
            if inside != (r < k):
                failures.append({"sample": n, "k": k, "rank": r, "member": inside})
    return HiggsSweep(p, q, seed, samples, checked, failures, dict(sorted(hist.items())))
