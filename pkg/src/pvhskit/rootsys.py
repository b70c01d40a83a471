"""Root systems of types A-E7 with Bourbaki node numbering.

Roots are integer vectors in the simple-root basis, weights are integer
vectors in the fundamental-weight basis.  The Cartan matrix follows

    cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)

so column j of ``cartan`` holds the fundamental-weight coordinates of
alpha_j, and ``diag(symmetrizer) @ cartan`` is the Gram matrix of the simple
roots, normalised so that long roots have squared length 2.

Products of simple systems (needed for the isotropy algebra of type I
domains) are supported through :func:`product_system`; a product has no
single highest root.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm

import numpy as np

FAMILIES = ("A", "B", "C", "D", "E6", "E7")

_POSITIVE_ROOT_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E6": lambda l: 36,
    "E7": lambda l: 63,
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Weight:
    """An integral weight: fundamental-weight coordinates plus a U(1) charge.

    Ordering is lexicographic on ``(charge, coords)``.
    """

    charge: int
    coords: tuple[int, ...]

    @classmethod
    def of(cls, coords, charge: int = 0) -> "Weight":
        return cls(int(charge), tuple(int(c) for c in coords))

    def __str__(self) -> str:
        body = "(" + ",".join(str(c) for c in self.coords) + ")"
        return body if self.charge == 0 else f"C({self.charge}){body}"


# Alias matching the vocabulary used elsewhere in the package.
WeightVector = Weight


@dataclass(frozen=True, eq=False)
class RootSystem:
    family: str
    rank: int
    cartan: np.ndarray
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...] | None
    factors: tuple[tuple[str, int], ...] = field(default=())

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    @property
    def name(self) -> str:
        if len(self.factors) == 1:
            fam, l = self.factors[0]
            return fam if fam.startswith("E") else f"{fam}{l}"
        return "x".join(f if f.startswith("E") else f"{f}{l}" for f, l in self.factors) or "trivial"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    # -- derived integer data -------------------------------------------------

    @cached_property
    def positive_roots_weight_basis(self) -> np.ndarray:
        """Positive roots as rows of fundamental-weight coordinates."""
        if not self.positive_roots:
            return np.zeros((0, self.rank), dtype=np.int64)
        roots = np.array(self.positive_roots, dtype=np.int64)
        return roots @ self.cartan.T

    @cached_property
    def _form(self) -> tuple[np.ndarray, int]:
        # (omega_i, omega_j) = d_i (cartan^{-1})_{ij}; scaled to integers.
        l = self.rank
        if l == 0:
            return np.zeros((0, 0), dtype=np.int64), 1
        inv = _rational_inverse(self.cartan)
        F = [[self.symmetrizer[i] * inv[i][j] for j in range(l)] for i in range(l)]
        scale = lcm(*(x.denominator for row in F for x in row))
        G = np.array([[int(x * scale) for x in row] for row in F], dtype=np.int64)
        return G, scale

    @property
    def gram_weights(self) -> np.ndarray:
        """Integer matrix G with x @ G @ y == form_scale * (x, y) on weights."""
        return self._form[0]

    @property
    def form_scale(self) -> int:
        return self._form[1]

    def weight_inner(self, x, y) -> Fraction:
        G, s = self._form
        return Fraction(int(np.asarray(x) @ G @ np.asarray(y)), s)

    def root_inner(self, a, b) -> Fraction:
        """(a, b) for vectors given in simple-root coordinates."""
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * bj * self.symmetrizer[i] * int(self.cartan[i, j])
        return total

    def root_to_weight(self, root) -> tuple[int, ...]:
        return tuple(int(x) for x in self.cartan @ np.asarray(root, dtype=np.int64))

    @cached_property
    def _height_matrix(self) -> tuple[np.ndarray, int]:
        # height of a weight = sum of its simple-root coordinates (rational).
        l = self.rank
        if l == 0:
            return np.zeros(0, dtype=np.int64), 1
        inv = _rational_inverse(self.cartan)
        row = [sum(inv[i][j] for i in range(l)) for j in range(l)]
        scale = lcm(*(x.denominator for x in row))
        return np.array([int(x * scale) for x in row], dtype=np.int64), scale

    def heights(self, coords: np.ndarray) -> np.ndarray:
        """Scaled heights (integers, order-preserving) of weight rows."""
        return np.asarray(coords, dtype=np.int64) @ self._height_matrix[0]

    @cached_property
    def root_set(self) -> frozenset[tuple[int, ...]]:
        pos = set(self.positive_roots)
        return frozenset(pos | {tuple(-x for x in r) for r in pos})

    def is_root(self, vec) -> bool:
        return tuple(int(x) for x in vec) in self.root_set

    @cached_property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank


def _rational_inverse(M: np.ndarray) -> list[list[Fraction]]:
    n = M.shape[0]
    a = [[Fraction(int(M[i, j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


# ---------------------------------------------------------------------------
# construction


def _cartan_and_lengths(family: str, l: int) -> tuple[np.ndarray, list[Fraction]]:
    A = 2 * np.eye(l, dtype=np.int64)

    def link(i, j):
        A[i, j] = A[j, i] = -1

    d = [Fraction(1)] * l
    if family in ("A", "B", "C"):
        for i in range(l - 1):
            link(i, i + 1)
        if family == "B":
            # alpha_l short
            A[l - 1, l - 2] = -2
            d[l - 1] = Fraction(1, 2)
        elif family == "C":
            # alpha_l long; short roots have squared length 1
            A[l - 2, l - 1] = -2
            d = [Fraction(1, 2)] * (l - 1) + [Fraction(1)]
    elif family == "D":
        for i in range(l - 2):
            link(i, i + 1)
        link(l - 3, l - 1)
    elif family in ("E6", "E7"):
        # Bourbaki: 1-3-4-5-6(-7), with 2 attached to 4
        link(0, 2)
        link(2, 3)
        link(1, 3)
        for i in range(3, l - 1):
            link(i, i + 1)
    return A, d


def _validate(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise RootSystemError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not isinstance(rank, (int, np.integer)) or rank < 1:
        raise RootSystemError(f"rank must be a positive integer, got {rank!r}")
    if family == "E6" and rank != 6:
        raise RootSystemError("E6 has rank 6")
    if family == "E7" and rank != 7:
        raise RootSystemError("E7 has rank 7")
    if family in ("B", "C") and rank < 2:
        raise RootSystemError(f"{family}_l needs l >= 2")
    if family == "D" and rank < 3:
        raise RootSystemError("D_l needs l >= 3")


def _positive_roots(cartan: np.ndarray) -> list[tuple[int, ...]]:
    l = cartan.shape[0]
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    found = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for r in layer:
            rv = np.array(r, dtype=np.int64)
            pairing = cartan @ rv  # <r, alpha_i^vee>
            for i in range(l):
                if r == simple[i]:
                    continue
                # alpha_i-string through r: r - p a_i, ..., r + q a_i with p - q = <r, a_i^vee>
                p = 0
                down = list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - int(pairing[i])
                if q > 0:
                    up = list(r)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
                        ordered.append(up)
        layer = nxt
    return ordered


def build_root_system(family: str, rank: int) -> RootSystem:
    """Root system of a simple Lie algebra, e.g. ``build_root_system("E6", 6)``."""
    _validate(family, rank)
    cartan, d = _cartan_and_lengths(family, int(rank))
    roots = _positive_roots(cartan)
    expected = _POSITIVE_ROOT_COUNT[family](int(rank))
    if len(roots) != expected:  # pragma: no cover - construction bug guard
        raise RootSystemError(f"{family}{rank}: generated {len(roots)} positive roots, expected {expected}")
    roots.sort(key=lambda r: (sum(r), r))
    highest = roots[-1]
    cartan.setflags(write=False)
    return RootSystem(
        family=family,
        rank=int(rank),
        cartan=cartan,
        symmetrizer=tuple(d),
        positive_roots=tuple(roots),
        highest_root=highest,
        factors=((family, int(rank)),),
    )


def product_system(*systems: RootSystem) -> RootSystem:
    """Direct sum of root systems (block-diagonal Cartan matrix)."""
    systems = [s for s in systems if s.rank > 0]
    if len(systems) == 1:
        return systems[0]
    rank = sum(s.rank for s in systems)
    cartan = np.zeros((rank, rank), dtype=np.int64)
    roots = []
    sym: list[Fraction] = []
    factors = []
    off = 0
    for s in systems:
        cartan[off : off + s.rank, off : off + s.rank] = s.cartan
        for r in s.positive_roots:
            roots.append((0,) * off + r + (0,) * (rank - off - s.rank))
        sym.extend(s.symmetrizer)
        factors.extend(s.factors)
        off += s.rank
    cartan.setflags(write=False)
    roots.sort(key=lambda r: (sum(r), r))
    return RootSystem(
        family="product",
        rank=rank,
        cartan=cartan,
        symmetrizer=tuple(sym),
        positive_roots=tuple(roots),
        highest_root=None,
        factors=tuple(factors),
    )


def factor_slices(rs: RootSystem) -> list[slice]:
    out, off = [], 0
    for _, l in rs.factors:
        out.append(slice(off, off + l))
        off += l
    return out


# ---------------------------------------------------------------------------
# operations


def _coords(beta) -> tuple[tuple[int, ...], int]:
    if isinstance(beta, Weight):
        return beta.coords, beta.charge
    return tuple(int(c) for c in beta), 0


def coroot_pairing(rs: RootSystem, beta, alpha) -> Fraction:
    """beta(H_alpha) = 2 (beta, alpha) / (alpha, alpha) for a root alpha."""
    coords, _ = _coords(beta)
    alpha = tuple(int(x) for x in alpha)
    if not any(alpha):
        raise RootSystemError("coroot pairing with the zero vector")
    if alpha not in rs.root_set:
        raise RootSystemError(f"{alpha} is not a root of {rs.name}")
    # (beta, alpha) = sum_j c_j b_j d_j  with alpha = sum c_j alpha_j
    num = sum(Fraction(c * b) * rs.symmetrizer[j] for j, (c, b) in enumerate(zip(alpha, coords)))
    return 2 * num / rs.root_inner(alpha, alpha)


def simple_reflection(rs: RootSystem, i: int, beta: Weight) -> Weight:
    """s_i(beta) for a 1-based node index i."""
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"node index {i} outside 1..{rs.rank}")
    coords, charge = _coords(beta)
    b = coords[i - 1]
    if b == 0:
        return Weight(charge, coords)
    col = rs.cartan[:, i - 1]
    return Weight(charge, tuple(int(c - b * a) for c, a in zip(coords, col)))


def reflect_root(rs: RootSystem, i: int, root) -> tuple[int, ...]:
    """s_i on a vector in simple-root coordinates (1-based i)."""
    root = np.asarray(root, dtype=np.int64)
    k = int(rs.cartan[i - 1] @ root)
    out = root.copy()
    out[i - 1] -= k
    return tuple(int(x) for x in out)


def orbit_array(rs: RootSystem, coords: np.ndarray) -> np.ndarray:
    """All Weyl conjugates of the given weight rows (coords only), vectorised."""
    l = rs.rank
    start = np.unique(np.atleast_2d(np.asarray(coords, dtype=np.int64)), axis=0)
    if l == 0:
        return start
    seen = {tuple(r) for r in start.tolist()}
    frontier = start
    chunks = [start]
    cartan_t = rs.cartan.T.astype(np.int64)
    while frontier.shape[0]:
        new_rows = []
        for i in range(l):
            b = frontier[:, i]
            mask = b != 0
            if not mask.any():
                continue
            moved = frontier[mask] - b[mask, None] * cartan_t[i][None, :]
            new_rows.append(moved)
        if not new_rows:
            break
        cand = np.unique(np.concatenate(new_rows), axis=0)
        fresh = [r for r in cand.tolist() if tuple(r) not in seen]
        seen.update(tuple(r) for r in fresh)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, l)
        chunks.append(frontier)
    return np.concatenate(chunks)


def weyl_orbit(rs: RootSystem, beta) -> set[Weight]:
    coords, charge = _coords(beta)
    rows = orbit_array(rs, np.array([coords], dtype=np.int64).reshape(1, rs.rank))
    return {Weight(charge, tuple(r)) for r in rows.tolist()}


def root_orbit(rs: RootSystem, root) -> set[tuple[int, ...]]:
    """Weyl orbit of a vector given in simple-root coordinates."""
    start = tuple(int(x) for x in root)
    seen = {start}
    queue = deque([start])
    while queue:
        r = queue.popleft()
        for i in range(1, rs.rank + 1):
            s = reflect_root(rs, i, r)
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return seen


def to_dominant(rs: RootSystem, coords) -> tuple[int, ...]:
    c = list(int(x) for x in coords)
    cartan_t = rs.cartan.T
    while True:
        for i, b in enumerate(c):
            if b < 0:
                c = [x - b * int(a) for x, a in zip(c, cartan_t[i])]
                break
        else:
            return tuple(c)


def special_nodes(rs: RootSystem) -> list[int]:
    """1-based nodes whose coefficient in the highest root equals one."""
    if rs.highest_root is None:
        raise RootSystemError("special nodes are defined for simple systems only")
    return [i + 1 for i, c in enumerate(rs.highest_root) if c == 1]


def strongly_orthogonal(rs: RootSystem, a, b) -> bool:
    s = tuple(x + y for x, y in zip(a, b))
    d = tuple(x - y for x, y in zip(a, b))
    return s not in rs.root_set and d not in rs.root_set and rs.root_inner(a, b) == 0


def strongly_orthogonal_cascade(rs: RootSystem, special_node: int) -> list[tuple[int, ...]]:
    """Maximal strongly orthogonal set of non-compact positive roots, greedy from the top.

    Non-compact means the coefficient of the special simple root is one.
    Each step takes the highest remaining root (ties broken lexicographically)
    that is strongly orthogonal to everything already chosen.
    """
    if special_node not in special_nodes(rs):
        raise RootSystemError(f"node {special_node} is not a special node of {rs.name}")
    k = special_node - 1
    candidates = [r for r in rs.positive_roots if r[k] == 1]
    chosen: list[tuple[int, ...]] = []
    while True:
        pool = [r for r in candidates if all(strongly_orthogonal(rs, r, c) for c in chosen)]
        if not pool:
            return chosen
        chosen.append(max(pool, key=lambda r: (sum(r), r)))
