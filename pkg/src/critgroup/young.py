"""Partitions, Young's lattice up/down operators and the reflection-representation formulas.

Partitions of n are always listed in descending lexicographic order, which
is also the row order of :func:`critgroup.chartab.symmetric_group_table`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .intlinalg import (
    AbelianGroupStructure,
    IntegerMatrix,
    cokernel,
    mat_mul,
    scalar_identity,
)

__all__ = [
    "Partition",
    "RankBasis",
    "partitions_of",
    "partition_count",
    "up_matrix",
    "down_matrix",
    "ud_matrix",
    "corner_statistic",
    "kronecker_row",
    "kronecker_matrix",
    "alpha_eval",
    "theorem15_structure",
    "specialization_check",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    def removable_rows(self) -> list[int]:
        """Rows whose last cell is a removable corner."""
        return [i for i in range(len(self)) if i == len(self) - 1 or self[i] > self[i + 1]]

    def addable_rows(self) -> list[int]:
        """Rows (possibly one past the end) where a cell can be added."""
        return [i for i in range(len(self) + 1) if i == 0 or self[i - 1] > (self[i] if i < len(self) else 0)]

    def remove_cell(self, i: int) -> Partition:
        parts = list(self)
        parts[i] -= 1
        return Partition(p for p in parts if p)

    def add_cell(self, i: int) -> Partition:
        parts = list(self) + [0]
        parts[i] += 1
        return Partition(p for p in parts if p)

    def covers(self) -> list[Partition]:
        """Partitions obtained by adding one cell."""
        return [self.add_cell(i) for i in self.addable_rows()]

    def covered(self) -> list[Partition]:
        """Partitions obtained by removing one cell."""
        return [self.remove_cell(i) for i in self.removable_rows()]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


@lru_cache(maxsize=None)
def _partitions(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    # partitions of n with largest part <= cap, descending lex
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


@dataclass(frozen=True)
class RankBasis:
    """All partitions of n, in descending lexicographic order."""

    n: int
    partitions: tuple[Partition, ...]

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self):
        return iter(self.partitions)

    def index(self, lam) -> int:
        return self._positions()[Partition(lam)]

    def _positions(self) -> dict:
        return _positions(self.n)


@lru_cache(maxsize=None)
def _positions(n: int) -> dict:
    return {lam: k for k, lam in enumerate(partitions_of(n).partitions)}


@lru_cache(maxsize=None)
def partitions_of(n: int) -> RankBasis:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return RankBasis(n, tuple(Partition(p) for p in _partitions(n, n)))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence; p(0) = 1 and p(n) = 0 for n < 0."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def _diff(j: int) -> int:
    return partition_count(j) - partition_count(j - 1)


def up_matrix(i: int) -> IntegerMatrix:
    """U_i : Z Y_i -> Z Y_{i+1}, a p(i+1) x p(i) 0/1 matrix."""
    src, dst = partitions_of(i), partitions_of(i + 1)
    out = [[0] * len(src) for _ in range(len(dst))]
    for col, lam in enumerate(src):
        for mu in lam.covers():
            out[dst.index(mu)][col] = 1
    return IntegerMatrix.from_rows(out, len(src))


def down_matrix(i: int) -> IntegerMatrix:
    """D_i : Z Y_i -> Z Y_{i-1}, a p(i-1) x p(i) 0/1 matrix."""
    if i < 1:
        raise ValueError(f"down_matrix needs i >= 1, got {i}")
    src, dst = partitions_of(i), partitions_of(i - 1)
    out = [[0] * len(src) for _ in range(len(dst))]
    for col, lam in enumerate(src):
        for mu in lam.covered():
            out[dst.index(mu)][col] = 1
    return IntegerMatrix.from_rows(out, len(src))


def ud_matrix(n: int) -> IntegerMatrix:
    """U_{n-1} D_n on Z Y_n."""
    if n < 1:
        raise ValueError(f"ud_matrix needs n >= 1, got {n}")
    return mat_mul(up_matrix(n - 1), down_matrix(n))


def corner_statistic(lam) -> int:
    """Number of strict descents lam_i > lam_{i+1} with 1 <= i <= len(lam) - 1."""
    lam = Partition(lam)
    return sum(1 for a, b in zip(lam, lam[1:]) if a > b)


def kronecker_row(lam) -> tuple[int, ...]:
    """Coefficients of chi_(n-1,1) * chi_lam over the partitions of n.

    The diagonal coefficient is the corner statistic; every other partition
    reachable by removing a corner cell and adding one back gets a 1.
    """
    lam = Partition(lam)
    n = lam.size
    if n < 2:
        raise ValueError("kronecker_row needs |lam| >= 2")
    basis = partitions_of(n)
    row = [0] * len(basis)
    row[basis.index(lam)] = corner_statistic(lam)
    for smaller in lam.covered():
        for mu in smaller.covers():
            if mu != lam:
                row[basis.index(mu)] = 1
    return tuple(row)


def kronecker_matrix(n: int) -> IntegerMatrix:
    return IntegerMatrix.from_rows([kronecker_row(lam) for lam in partitions_of(n)])


def alpha_eval(n: int, i: int, t: int) -> int:
    """prod of (t + k) over 0 <= k <= n with p(n-k) - p(n-k-1) >= i."""
    if n < 1 or i < 1:
        raise ValueError(f"alpha_eval needs n, i >= 1, got n={n}, i={i}")
    return prod(t + k for k in range(n + 1) if _diff(n - k) >= i)


def theorem15_structure(n: int) -> AbelianGroupStructure:
    """Critical group of the reflection representation of S_n in closed form.

    Invariant factors q_i = prod of j in 1..n with p(j) - p(j-1) >= i, for
    i = 2 .. p(n) - p(n-1), listed smallest first with ones dropped.
    """
    if n < 2:
        raise ValueError(f"the reflection representation needs n >= 2, got {n}")
    qs = [prod(j for j in range(1, n + 1) if _diff(j) >= i) for i in range(2, _diff(n) + 1)]
    return AbelianGroupStructure(tuple(q for q in reversed(qs) if q > 1))


def specialization_check(n: int, t: int) -> bool:
    """Compare coker(UD + tI) with the cokernel of diag(alpha_p(n)(t), ..., alpha_1(t))."""
    size = partition_count(n)
    lhs = cokernel(ud_matrix(n) + scalar_identity(size, t))
    alphas = [alpha_eval(n, i, t) for i in range(size, 0, -1)]
    rhs = cokernel(IntegerMatrix.diagonal(alphas))
    return lhs == rhs
