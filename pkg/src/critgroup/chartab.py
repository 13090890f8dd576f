"""Character tables of finite groups and operations on class functions.

Tables are square: rows are irreducible characters, columns are conjugacy
classes.  Row 0 is always the trivial character and column 0 the identity
class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, lcm, prod
from typing import Sequence

from .exactnum import Cyclotomic, NotAnInteger
from .intlinalg import IntegerMatrix
from .young import Partition, partitions_of

__all__ = [
    "OutOfRange",
    "NotACharacter",
    "ConjugacyClassInfo",
    "CharacterTable",
    "ClassFunction",
    "validate",
    "symmetric_group_table",
    "cyclic_group_table",
    "trivial_group_table",
    "regular_character",
    "reflection_character",
    "irreducible_character",
    "character_sum",
    "product_decomposition",
    "inner_product",
    "is_faithful",
    "kernel_classes",
    "is_real_valued",
    "is_rational_valued",
    "cycle_type_from_label",
]

SYMMETRIC_MAX = 12


class OutOfRange(ValueError):
    pass


class NotACharacter(ValueError):
    pass


@dataclass(frozen=True)
class ConjugacyClassInfo:
    label: str
    size: int


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group_name: str
    order: int
    exponent: int
    classes: tuple[ConjugacyClassInfo, ...]
    values: tuple[tuple[Cyclotomic, ...], ...]
    # optional family tag, e.g. ("symmetric", 4) or ("cyclic", 6)
    family: tuple[str, int] | None = None
    identity_class: int = field(default=0)
    trivial_char: int = field(default=0)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row[self.identity_class].to_integer() for row in self.values)

    def column(self, c: int) -> tuple[Cyclotomic, ...]:
        return tuple(row[c] for row in self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return (self.group_name == other.group_name and self.order == other.order
                and self.exponent == other.exponent and self.classes == other.classes
                and self.values == other.values and self.family == other.family)

    __hash__ = object.__hash__


@dataclass(frozen=True, eq=False)
class ClassFunction:
    table: CharacterTable
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        vals = tuple(Cyclotomic.coerce(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.table.num_classes:
            raise ValueError(f"{len(vals)} values for {self.table.num_classes} classes")

    @property
    def degree(self) -> Cyclotomic:
        return self.values[self.table.identity_class]

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if other.table is not self.table:
            raise ValueError("class functions live on different tables")
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table is other.table and self.values == other.values

    __hash__ = object.__hash__


def inner_product(table: CharacterTable, a: Sequence, b: Sequence) -> Cyclotomic:
    """<a, b> = (1/|G|) sum over classes of |c| a(c) conj(b(c))."""
    total = Cyclotomic.rational(0)
    for cls, x, y in zip(table.classes, a, b):
        total = total + cls.size * (Cyclotomic.coerce(x) * Cyclotomic.coerce(y).conj())
    return total / table.order


def validate(table: CharacterTable) -> list[str]:
    """List every violated table invariant; empty means the table is sound."""
    problems = []
    k = table.num_classes
    if len(table.values) != k or any(len(r) != k for r in table.values):
        return [f"shape: table must be {k}x{k} to match {k} classes"]
    if table.identity_class != 0 or table.trivial_char != 0:
        problems.append("normalization: identity class and trivial character must sit at index 0")
    sizes = [c.size for c in table.classes]
    if any(s < 1 for s in sizes):
        problems.append("class sizes: every class size must be positive")
    if sum(sizes) != table.order:
        problems.append(f"class sizes: sum {sum(sizes)} != group order {table.order}")
    if k and sizes[0] != 1:
        problems.append(f"identity class: size {sizes[0]} != 1")
    if k and any(v != 1 for v in table.values[0]):
        problems.append("trivial character: row 0 is not all ones")
    for i, row in enumerate(table.values):
        for j, v in enumerate(row):
            if v.order > 1 and table.exponent % v.order:
                problems.append(f"exponent: value ({i},{j}) has order {v.order} not dividing {table.exponent}")
        d = row[0] if k else None
        if d is not None and not (d.is_integer() and d.to_integer() > 0):
            problems.append(f"degrees: chi_{i}(e) = {d} is not a positive integer")
    if problems:
        return problems
    for i in range(k):
        for j in range(i, k):
            ip = inner_product(table, table.values[i], table.values[j])
            if ip != (1 if i == j else 0):
                problems.append(f"row orthogonality: <chi_{i}, chi_{j}> = {ip}")
    if sum(d * d for d in table.degrees) != table.order:
        problems.append(f"degree sum: sum of squared degrees != {table.order}")
    return problems


# ---------------------------------------------------------------------------
# Symmetric groups: Murnaghan-Nakayama on beta-sets


def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    parts = list(lam) + [0] * (length - len(lam))
    return tuple(p + length - 1 - i for i, p in enumerate(parts))


def _mn_values(n: int) -> dict[tuple[Partition, Partition], int]:
    # memo is local to one construction call
    memo: dict[tuple[frozenset, tuple[int, ...]], int] = {}

    def chi(beta: frozenset, mu: tuple[int, ...]) -> int:
        if not mu:
            return 1
        key = (beta, mu)
        if key in memo:
            return memo[key]
        r, rest = mu[0], mu[1:]
        total = 0
        for b in beta:
            if b - r >= 0 and (b - r) not in beta:
                # rim hook of length r; its height is the number of beads jumped
                height = sum(1 for x in beta if b - r < x < b)
                total += (-1) ** height * chi(beta - {b} | {b - r}, rest)
        memo[key] = total
        return total

    parts = partitions_of(n).partitions
    return {(lam, mu): chi(frozenset(_beta_set(lam, n)), tuple(mu)) for lam in parts for mu in parts}


def _centralizer_order(mu: Partition) -> int:
    counts: dict[int, int] = {}
    for p in mu:
        counts[p] = counts.get(p, 0) + 1
    return prod(i ** a * factorial(a) for i, a in counts.items())


def _symmetric_classes(n: int) -> list[Partition]:
    parts = list(partitions_of(n).partitions)
    ident = parts.pop()  # (1^n) is last in descending lex
    return [ident] + parts


def cycle_type_from_label(label: str) -> Partition:
    return Partition(sorted((int(x) for x in label.strip("()").split(",") if x.strip()), reverse=True))


def symmetric_group_table(n: int) -> CharacterTable:
    """Character table of S_n.

    Rows are partitions in descending lexicographic order, so the trivial
    character (n) comes first.  Columns are cycle types in the same order
    except that the identity class (1^n) is moved to the front.
    """
    if not 1 <= n <= SYMMETRIC_MAX:
        raise OutOfRange(f"symmetric_group_table supports 1 <= n <= {SYMMETRIC_MAX}, got {n}")
    mn = _mn_values(n)
    rows = partitions_of(n).partitions
    cols = _symmetric_classes(n)
    order = factorial(n)
    classes = tuple(ConjugacyClassInfo(str(mu), order // _centralizer_order(mu)) for mu in cols)
    values = tuple(tuple(Cyclotomic.rational(mn[lam, mu]) for mu in cols) for lam in rows)
    exponent = lcm(*range(1, n + 1))
    return CharacterTable(f"S{n}", order, exponent, classes, values, ("symmetric", n))


def cyclic_group_table(m: int) -> CharacterTable:
    """Character table of Z/m: chi_j(g^k) = zeta_m^(jk)."""
    if m < 1:
        raise OutOfRange(f"cyclic_group_table needs m >= 1, got {m}")
    classes = tuple(ConjugacyClassInfo("e" if k == 0 else f"g^{k}", 1) for k in range(m))
    values = tuple(tuple(Cyclotomic.zeta(m, j * k) for k in range(m)) for j in range(m))
    return CharacterTable(f"C{m}", m, m, classes, values, ("cyclic", m))


def trivial_group_table() -> CharacterTable:
    return cyclic_group_table(1)


# ---------------------------------------------------------------------------
# Distinguished characters


def irreducible_character(table: CharacterTable, i: int) -> ClassFunction:
    if not 0 <= i < table.num_classes:
        raise IndexError(f"character index {i} out of range 0..{table.num_classes - 1}")
    return ClassFunction(table, table.values[i])


def character_sum(table: CharacterTable, indices: Sequence[int]) -> ClassFunction:
    if not indices:
        raise ValueError("empty character sum")
    chars = [irreducible_character(table, i) for i in indices]
    total = chars[0]
    for c in chars[1:]:
        total = total + c
    return total


def regular_character(table: CharacterTable) -> ClassFunction:
    return ClassFunction(table, tuple(table.order if c == table.identity_class else 0
                                      for c in range(table.num_classes)))


def reflection_character(n: int, table: CharacterTable | None = None) -> ClassFunction:
    """fix(sigma) - 1 on S_n, read off each class's cycle type."""
    if n < 2:
        raise OutOfRange(f"the reflection representation needs n >= 2, got {n}")
    if table is None:
        table = symmetric_group_table(n)
    elif table.family != ("symmetric", n):
        raise ValueError(f"{table.group_name} is not the symmetric group S{n}")
    vals = []
    for cls in table.classes:
        mu = cycle_type_from_label(cls.label)
        if mu.size != n:
            raise ValueError(f"class label {cls.label!r} is not a cycle type of {n}")
        vals.append(sum(1 for p in mu if p == 1) - 1)
    return ClassFunction(table, tuple(vals))


def product_decomposition(table: CharacterTable, gamma: ClassFunction) -> IntegerMatrix:
    """The matrix M with chi_gamma * chi_i = sum_j M[i, j] chi_j."""
    k = table.num_classes
    # |c| * gamma(c) * chi_i(c) / |G|, then pair against conj(chi_j)
    conj_rows = [[v.conj() for v in row] for row in table.values]
    weights = [cls.size * g for cls, g in zip(table.classes, gamma.values)]
    out = []
    for i in range(k):
        w = [x * v for x, v in zip(weights, table.values[i])]
        row = []
        for j in range(k):
            s = Cyclotomic.rational(0)
            for a, b in zip(w, conj_rows[j]):
                s = s + a * b
            s = s / table.order
            try:
                mij = s.to_integer()
            except NotAnInteger:
                raise NotACharacter(f"multiplicity of chi_{j} in gamma*chi_{i} is {s}, not an integer") from None
            if mij < 0:
                raise NotACharacter(f"multiplicity of chi_{j} in gamma*chi_{i} is negative ({mij})")
            row.append(mij)
        out.append(row)
    return IntegerMatrix.from_rows(out, k)


def kernel_classes(table: CharacterTable, gamma: ClassFunction) -> list[int]:
    """Non-identity classes on which gamma takes its degree value."""
    n = gamma.degree
    return [c for c, v in enumerate(gamma.values) if c != table.identity_class and v == n]


def is_faithful(table: CharacterTable, gamma: ClassFunction) -> bool:
    return not kernel_classes(table, gamma)


def is_real_valued(gamma: ClassFunction) -> bool:
    return all(v.is_real() for v in gamma.values)


def is_rational_valued(gamma: ClassFunction) -> bool:
    return all(v.is_rational() for v in gamma.values)

