"""Partition combinatorics for Schur functors of GL(m).

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the zero partition.  Every function returning a family of
partitions returns them in reverse lexicographic order, so ``(4)`` comes
before ``(3, 1)`` before ``(2, 2)``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from fractions import Fraction

Partition = tuple[int, ...]

LR_BOX_LIMIT = 20


class PartitionError(ValueError):
    pass


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise PartitionError(f"{tuple(parts)} is not a partition")
    return p


def partitions(n: int, max_rows: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_rows == 0:
        return
    for first in range(max_part, 0, -1):
        rest_rows = None if max_rows is None else max_rows - 1
        for tail in partitions(n - first, rest_rows, first):
            yield (first,) + tail


def _ordered(parts) -> list[Partition]:
    return sorted(set(parts), reverse=True)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def schur_dimension(lam: Sequence[int], m: int) -> int:
    """dim S_lambda(C^m) by the hook-content formula."""
    lam = as_partition(lam)
    if len(lam) > m:
        return 0
    lam_c = conjugate(lam)
    value = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j) + (lam_c[j] - i) - 1
            value *= Fraction(m + j - i, hook)
    return int(value)


def contains(nu: Sequence[int], mu: Sequence[int]) -> bool:
    return len(mu) <= len(nu) and all(a >= b for a, b in zip(nu, mu))


def is_horizontal_strip(nu: Partition, mu: Partition) -> bool:
    if not contains(nu, mu):
        return False
    padded = list(mu) + [0] * (len(nu) - len(mu))
    return all(nu[i + 1] <= padded[i] for i in range(len(nu) - 1))


def is_vertical_strip(nu: Partition, mu: Partition) -> bool:
    return is_horizontal_strip(conjugate(nu), conjugate(mu))


def _horizontal_strips(mu: Partition, k: int) -> Iterator[Partition]:
    rows = len(mu) + 1
    upper = [None] + list(mu)  # row i may grow up to mu[i-1]
    base = list(mu) + [0]

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield as_partition(acc)
            return
        cap = left if upper[i] is None else min(left, upper[i] - base[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + [base[i] + add])

    yield from rec(0, k, [])


def pieri_rows(mu: Sequence[int], k: int, max_rows: int) -> list[Partition]:
    """Shapes nu with nu/mu a horizontal k-strip and at most max_rows rows."""
    mu = as_partition(mu)
    return _ordered(nu for nu in _horizontal_strips(mu, k) if len(nu) <= max_rows)


def pieri_cols(mu: Sequence[int], k: int, max_rows: int) -> list[Partition]:
    """Shapes nu with nu/mu a vertical k-strip and at most max_rows rows."""
    mu = as_partition(mu)
    out = (conjugate(nu) for nu in _horizontal_strips(conjugate(mu), k))
    return _ordered(nu for nu in out if len(nu) <= max_rows)


def _is_lattice(word: list[int]) -> bool:
    seen = Counter()
    for x in word:
        seen[x] += 1
        if x > 1 and seen[x] > seen[x - 1]:
            return False
    return True


def lr_coefficients(lam: Sequence[int], mu: Sequence[int], max_rows: int) -> dict[Partition, int]:
    """c^nu_{lam, mu} for all nu with at most max_rows rows.

    Direct enumeration of Littlewood-Richardson skew tableaux of shape nu/mu
    and content lam: the letter i occupies a horizontal strip added on top of
    the shape built from letters < i, and the row-reading word (right to left,
    top to bottom) must be a lattice word.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) + sum(mu) > LR_BOX_LIMIT:
        raise PartitionError(f"{sum(lam) + sum(mu)} boxes exceeds the enumeration guard of {LR_BOX_LIMIT}")
    counts: Counter = Counter()

    def rec(letter: int, shape: Partition, cells: dict):
        if letter > len(lam):
            rows = {}
            for (r, c), x in cells.items():
                rows.setdefault(r, []).append((c, x))
            word = [x for r in sorted(rows) for _, x in sorted(rows[r], reverse=True)]
            if _is_lattice(word):
                counts[shape] += 1
            return
        for nxt in _horizontal_strips(shape, lam[letter - 1]):
            new_cells = dict(cells)
            for r, length in enumerate(nxt):
                start = shape[r] if r < len(shape) else 0
                for c in range(start, length):
                    new_cells[(r, c)] = letter
            rec(letter + 1, nxt, new_cells)

    rec(1, mu, {})
    return {nu: counts[nu] for nu in _ordered(counts) if len(nu) <= max_rows}


def lr_product(lam: Sequence[int], mu: Sequence[int], max_rows: int) -> Counter:
    return Counter(lr_coefficients(lam, mu, max_rows))


# ---------------------------------------------------------------------------
# closed-form families


def cauchy_sym(k: int, p: int, q: int) -> list[Partition]:
    """Partitions labelling S_lam(V1) x S_lam(V2) in S^k(V1 x V2), dim V1 = p <= q."""
    if p > q:
        raise PartitionError("normalise to p <= q")
    return list(partitions(k, max_rows=p))


def sym_of_sym(k: int, n: int) -> list[Partition]:
    """S^k(S^2 V) = sum of S_lam V over even-row partitions of 2k, dim V = n."""
    return [tuple(2 * x for x in lam) for lam in partitions(k, max_rows=n)]


def sym_of_ext(k: int, n: int) -> list[Partition]:
    """S^k(Lambda^2 V) = sum of S_lam V over even-column partitions of 2k, dim V = n."""
    out = [conjugate(tuple(2 * x for x in lam)) for lam in partitions(k)]
    return _ordered(lam for lam in out if len(lam) <= n)


# ---------------------------------------------------------------------------
# bridge to sl(m) highest weights


def partition_to_label(lam: Sequence[int], m: int, *, dual: bool = False) -> tuple[int, ...] | None:
    """sl(m) label of S_lam(C^m) (a_i = lam_i - lam_{i+1}); reversed for the dual.

    Returns None when lam has more than m rows (the functor vanishes).
    Determinant twists are dropped.
    """
    lam = as_partition(lam)
    if len(lam) > m:
        return None
    padded = list(lam) + [0] * (m - len(lam))
    label = tuple(padded[i] - padded[i + 1] for i in range(m - 1))
    return label[::-1] if dual else label


def label_to_partition(label: Sequence[int], *, dual: bool = False) -> Partition:
    """Smallest partition whose sl(m) label is ``label`` (no full columns)."""
    a = list(label)[::-1] if dual else list(label)
    parts = [sum(a[i:]) for i in range(len(a))]
    return as_partition(parts)

