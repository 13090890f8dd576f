"""Dense integer matrices, Smith normal form and cokernels.

All entries are Python ints, so there is no overflow.  Matrices act on
column vectors; the cokernel of an r x c matrix A is Z^r / A Z^c.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence

__all__ = [
    "ShapeMismatch",
    "IntegerMatrix",
    "SmithDecomposition",
    "AbelianGroupStructure",
    "snf",
    "cokernel",
    "subgroup_embeds",
    "mat_mul",
    "mat_sub",
    "scalar_identity",
    "parse_matrix",
    "format_matrix",
]


class ShapeMismatch(ValueError):
    pass


class IntegerMatrix:
    """Immutable dense integer matrix.

    Zero-size shapes are allowed (the reduced McKay-Cartan matrix of the
    trivial group is 0 x 0).
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]) -> None:
        data = tuple(int(x) for x in entries)
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise ShapeMismatch(f"{len(data)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return scalar_identity(n, 1)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntegerMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> IntegerMatrix:
        return IntegerMatrix(self.cols, self.rows,
                             (self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def delete(self, index: int) -> IntegerMatrix:
        """Drop row ``index`` and column ``index`` of a square matrix."""
        keep = [k for k in range(self.rows) if k != index]
        return IntegerMatrix.from_rows([[self[i, j] for j in keep] for i in keep], len(keep))

    def apply(self, vec: Sequence):
        """Matrix times a column vector of any ring elements."""
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vec)} vs {self.cols} columns")
        out = []
        for i in range(self.rows):
            acc = 0
            for a, v in zip(self.row(i), vec):
                if a:
                    acc = acc + a * v
            out.append(acc)
        return out

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ShapeMismatch("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        return mat_mul(self, other)

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return IntegerMatrix(self.rows, self.cols, (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: IntegerMatrix) -> IntegerMatrix:
        return mat_sub(self, other)

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix(self.rows, self.cols, (-a for a in self._data))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntegerMatrix.from_rows({self.tolist()!r})"

    def __str__(self) -> str:
        return format_matrix(self)


def mat_mul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"{a.shape} @ {b.shape}")
    bt = [b.T.row(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(sum(x * y for x, y in zip(r, c)) for c in bt)
    return IntegerMatrix(a.rows, b.cols, out)


def mat_sub(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if a.shape != b.shape:
        raise ShapeMismatch(f"{a.shape} - {b.shape}")
    return IntegerMatrix(a.rows, a.cols, (x - y for x, y in zip(a._data, b._data)))


def scalar_identity(n: int, c: int) -> IntegerMatrix:
    return IntegerMatrix(n, n, (c if i == j else 0 for i in range(n) for j in range(n)))


# ---------------------------------------------------------------------------
# Smith normal form


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class SmithDecomposition:
    """``P @ A @ Q == S`` with P, Q unimodular and ``S`` diagonal."""

    P: IntegerMatrix
    S: IntegerMatrix
    Q: IntegerMatrix
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _row_combine(m: list[list[int]], i: int, k: int, a: int, b: int, c: int, d: int) -> None:
    # rows (i, k) <- [[a, b], [c, d]] @ rows (i, k)
    ri, rk = m[i], m[k]
    m[i] = [a * x + b * y for x, y in zip(ri, rk)]
    m[k] = [c * x + d * y for x, y in zip(ri, rk)]


def _col_combine(m: list[list[int]], j: int, k: int, a: int, b: int, c: int, d: int) -> None:
    # cols (j, k) <- cols (j, k) @ [[a, c], [b, d]]
    for r in m:
        x, y = r[j], r[k]
        r[j] = a * x + b * y
        r[k] = c * x + d * y


def snf(A: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    The pivot is the nonzero entry of least absolute value in the working
    block (ties to the lowest row, then column); rows and columns are
    cleared with Bezout 2x2 steps.  Deterministic.
    """
    r, c = A.shape
    a = A.tolist()
    P = IntegerMatrix.identity(r).tolist()
    Qt = IntegerMatrix.identity(c).tolist()  # Q transposed, so column ops become row ops

    def row_op(i, k, x, y, z, w):
        _row_combine(a, i, k, x, y, z, w)
        _row_combine(P, i, k, x, y, z, w)

    def col_op(j, k, x, y, z, w):
        _col_combine(a, j, k, x, y, z, w)
        _row_combine(Qt, j, k, x, y, z, w)

    diag = []
    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            P[t], P[pi] = P[pi], P[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            Qt[t], Qt[pj] = Qt[pj], Qt[t]

        while True:
            for i in range(t + 1, r):
                b = a[i][t]
                if not b:
                    continue
                p = a[t][t]
                if b % p == 0:
                    row_op(t, i, 1, 0, -(b // p), 1)
                else:
                    g, x, y = _xgcd(p, b)
                    row_op(t, i, x, y, -(b // g), p // g)
            for j in range(t + 1, c):
                b = a[t][j]
                if not b:
                    continue
                p = a[t][t]
                if b % p == 0:
                    col_op(t, j, 1, 0, -(b // p), 1)
                else:
                    g, x, y = _xgcd(p, b)
                    col_op(t, j, x, y, -(b // g), p // g)
            if any(a[i][t] for i in range(t + 1, r)):
                continue
            p = a[t][t]
            bad = next((i for i in range(t + 1, r)
                        if any(a[i][j] % p for j in range(t + 1, c))), None)
            if bad is None:
                break
            # pull a row the pivot does not divide into the pivot row
            row_op(t, bad, 1, 1, 0, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            P[t] = [-x for x in P[t]]
        diag.append(a[t][t])

    diag += [0] * (min(r, c) - len(diag))
    S = IntegerMatrix.diagonal(diag, r, c)
    return SmithDecomposition(IntegerMatrix.from_rows(P, r), S,
                              IntegerMatrix.from_rows(Qt, c).T, tuple(diag))


# ---------------------------------------------------------------------------
# Finite abelian groups


def _prime_powers(d: int) -> list[int]:
    """Prime powers exactly dividing d, by trial division."""
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            out.append(q)
        p += 1
    if d > 1:
        out.append(d)
    return out


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Finite abelian group Z/d1 + Z/d2 + ... with d1 | d2 | ... and every d >= 2."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        f = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", f)
        if any(d < 2 for d in f):
            raise ValueError(f"invariant factors must be >= 2: {f}")
        if any(b % a for a, b in zip(f, f[1:])):
            raise ValueError(f"invariant factors do not form a divisibility chain: {f}")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> AbelianGroupStructure:
        """Normalize any direct sum of cyclic groups Z/a_i (a_i != 0)."""
        orders = [abs(int(a)) for a in orders]
        if 0 in orders:
            raise ValueError("Z/0 is not finite")
        return cokernel(IntegerMatrix.diagonal(orders))[1]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " ⊕ ".join(f"ℤ/{d}ℤ" for d in self.invariant_factors)


def cokernel(A: IntegerMatrix) -> tuple[int, AbelianGroupStructure]:
    """Return (free rank, torsion) of Z^rows / A Z^cols."""
    diag = snf(A).diagonal
    rank = sum(1 for d in diag if d)
    return A.rows - rank, AbelianGroupStructure(tuple(d for d in diag if d > 1))


def subgroup_embeds(d: int, k: int, target: AbelianGroupStructure) -> bool:
    """Whether (Z/d)^k is isomorphic to a subgroup of ``target``.

    For each prime power p^a exactly dividing d, at least k invariant
    factors of the target must be divisible by p^a.
    """
    if k == 0 or d == 1:
        return True
    return all(sum(1 for f in target.invariant_factors if f % q == 0) >= k
               for q in _prime_powers(d))


# ---------------------------------------------------------------------------
# Plain-text matrix format: "rows cols" then one line of integers per row.


def parse_matrix(text: str) -> IntegerMatrix:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("first line must be 'rows cols'")
    r, c = (int(x) for x in lines[0])
    body = lines[1:]
    if len(body) != r:
        raise ValueError(f"expected {r} rows, found {len(body)}")
    for i, ln in enumerate(body):
        if len(ln) != c:
            raise ValueError(f"row {i + 1} has {len(ln)} entries, expected {c}")
    return IntegerMatrix(r, c, (int(x) for ln in body for x in ln))


def format_matrix(A: IntegerMatrix) -> str:
    lines = [f"{A.rows} {A.cols}"]
    lines += [" ".join(str(x) for x in A.row(i)) for i in range(A.rows)]
    return "\n".join(lines) + "\n"
