"""McKay-Cartan matrices and critical groups of faithful representations.

For a character gamma of degree n with fusion matrix M
(gamma * chi_i = sum_j M[i, j] chi_j), the extended McKay-Cartan matrix is
n*I - M and the reduced one drops the trivial character's row and column.
The critical group is the cokernel of the transposed reduced matrix.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .chartab import (
    CharacterTable,
    ClassFunction,
    NotACharacter,
    is_rational_valued,
    is_real_valued,
    kernel_classes,
    product_decomposition,
)
from .exactnum import Cyclotomic, NotAnInteger
from .intlinalg import (
    AbelianGroupStructure,
    IntegerMatrix,
    cokernel,
    mat_sub,
    scalar_identity,
    snf,
    subgroup_embeds,
)

__all__ = [
    "NotFaithful",
    "NotRealValued",
    "InternalInconsistency",
    "McKayPair",
    "CriticalGroupReport",
    "mckay_cartan",
    "critical_group",
    "order_formula",
    "subgroup_certificates",
    "eigenvalues",
    "eigen_check",
    "sylow_bound_check",
    "full_report",
]


class NotFaithful(ValueError):
    def __init__(self, table: CharacterTable, classes: list[int]):
        self.classes = classes
        labels = ", ".join(table.classes[c].label for c in classes)
        super().__init__(f"character is not faithful: it takes its degree value on class(es) {labels}")


class NotRealValued(ValueError):
    pass


class InternalInconsistency(AssertionError):
    """A cross-check failed; this indicates a bug, not bad input."""


@dataclass(frozen=True)
class McKayPair:
    extended: IntegerMatrix
    reduced: IntegerMatrix
    degree: int
    trivial_index: int = 0


@dataclass(frozen=True)
class CriticalGroupReport:
    group: AbelianGroupStructure
    order_formula_value: int
    certificates: tuple[tuple[int, int], ...]
    eigen_verified: bool
    sylow_bound_applicable: bool
    sylow_bound_holds: bool
    degree: int = 0
    real_valued: bool = True
    eigenvalues: tuple[Cyclotomic, ...] = field(default=(), compare=False)

    def as_dict(self) -> dict:
        return {
            "invariant_factors": list(self.group.invariant_factors),
            "order": self.group.order,
            "order_formula_value": self.order_formula_value,
            "certificates": [{"d": d, "multiplicity": k} for d, k in self.certificates],
            "eigen_verified": self.eigen_verified,
            "sylow_bound_applicable": self.sylow_bound_applicable,
            "sylow_bound_holds": self.sylow_bound_holds,
            "degree": self.degree,
            "real_valued": self.real_valued,
        }


def _degree(gamma: ClassFunction) -> int:
    try:
        n = gamma.degree.to_integer()
    except NotAnInteger:
        raise NotACharacter(f"degree {gamma.degree} is not an integer") from None
    if n < 1:
        raise NotACharacter(f"degree {n} is not positive")
    return n


def mckay_cartan(table: CharacterTable, gamma: ClassFunction) -> McKayPair:
    n = _degree(gamma)
    M = product_decomposition(table, gamma)
    extended = mat_sub(scalar_identity(M.rows, n), M)
    return McKayPair(extended, extended.delete(table.trivial_char), n, table.trivial_char)


def _require_faithful(table: CharacterTable, gamma: ClassFunction) -> None:
    bad = kernel_classes(table, gamma)
    if bad:
        raise NotFaithful(table, bad)


def critical_group(table: CharacterTable, gamma: ClassFunction) -> AbelianGroupStructure:
    """K(gamma) = coker(C^t), cross-checked against coker(C~^t) = Z + K(gamma)."""
    _require_faithful(table, gamma)
    pair = mckay_cartan(table, gamma)
    free, torsion = cokernel(pair.reduced.T)
    ext_free, ext_torsion = cokernel(pair.extended.T)
    if free != 0 or ext_free != 1 or ext_torsion != torsion:
        raise InternalInconsistency(
            f"coker(C^t) = Z^{free} + {torsion} but coker(C~^t) = Z^{ext_free} + {ext_torsion}")
    return torsion


def order_formula(table: CharacterTable, gamma: ClassFunction) -> int:
    """(1/|G|) * prod over non-identity classes of (n - gamma(c)).

    Zero exactly when gamma is unfaithful.
    """
    n = _degree(gamma)
    p = Cyclotomic.rational(1)
    for c, v in enumerate(gamma.values):
        if c != table.identity_class:
            p = p * (n - v)
    value = p / table.order
    try:
        out = value.to_integer()
    except NotAnInteger:
        raise InternalInconsistency(f"order formula gave {value}, not an integer") from None
    if out < 0:
        raise InternalInconsistency(f"order formula gave a negative value {out}")
    return out


def subgroup_certificates(table: CharacterTable, gamma: ClassFunction) -> list[tuple[int, int]]:
    """Pairs (d, k) such that (Z/d)^k must embed in K(gamma).

    Each integer value v taken on m >= 2 classes gives d = n - v and k = m - 1;
    pairs with d = 1 are dropped.
    """
    if not is_real_valued(gamma):
        raise NotRealValued("subgroup certificates need a real-valued character")
    _require_faithful(table, gamma)
    n = _degree(gamma)
    counts = Counter(v.to_integer() for v in gamma.values if v.is_integer())
    return sorted((n - v, m - 1) for v, m in counts.items() if m >= 2 and n - v >= 2)


def eigenvalues(table: CharacterTable, gamma: ClassFunction) -> list[Cyclotomic]:
    """n - gamma(c) for every class c, in class order."""
    n = _degree(gamma)
    return [n - v for v in gamma.values]


def eigen_check(table: CharacterTable, gamma: ClassFunction) -> bool:
    """Check that every character-table column is an eigenvector of C~.

    Also checks that the degree column spans the kernel of C~ and of its
    transpose (one zero in the Smith form).
    """
    pair = mckay_cartan(table, gamma)
    C = pair.extended
    for c, lam in enumerate(eigenvalues(table, gamma)):
        col = table.column(c)
        if C.apply(col) != [lam * x for x in col]:
            return False
    degrees = table.degrees
    if any(C.apply(degrees)) or any(C.T.apply(degrees)):
        return False
    return snf(C).diagonal.count(0) == 1


def _strip_small_primes(x: int, bound: int) -> int:
    for p in range(2, bound + 1):
        while x % p == 0:
            x //= p
    return x


def sylow_bound_check(table: CharacterTable, gamma: ClassFunction) -> tuple[bool, bool]:
    """(applicable, holds) for "every prime dividing |K| is at most 2n".

    Applicable only to rational-valued gamma; ``holds`` is still reported otherwise.
    """
    K = critical_group(table, gamma)
    n = _degree(gamma)
    return is_rational_valued(gamma), _strip_small_primes(K.order, 2 * n) == 1


def full_report(table: CharacterTable, gamma: ClassFunction) -> CriticalGroupReport:
    K = critical_group(table, gamma)
    formula = order_formula(table, gamma)
    real = is_real_valued(gamma)
    certs = subgroup_certificates(table, gamma) if real else []
    eig = eigen_check(table, gamma)
    applicable, holds = sylow_bound_check(table, gamma)

    if K.order != formula:
        raise InternalInconsistency(f"|K| = {K.order} but the order formula gives {formula}")
    for d, k in certs:
        if not subgroup_embeds(d, k, K):
            raise InternalInconsistency(f"(Z/{d})^{k} does not embed in {K}")
    if not eig:
        raise InternalInconsistency("character columns are not eigenvectors of the McKay-Cartan matrix")
    if applicable and not holds:
        raise InternalInconsistency(f"|K| = {K.order} has a prime factor above {2 * _degree(gamma)}")
    return CriticalGroupReport(K, formula, tuple(certs), eig, applicable, holds,
                               _degree(gamma), real, tuple(eigenvalues(table, gamma)))


def regular_expected(table: CharacterTable) -> AbelianGroupStructure:
    """(Z/|G|)^(l-1) for the regular representation, l + 1 = number of classes."""
    k = table.num_classes - 2
    return AbelianGroupStructure((table.order,) * max(k, 0) if table.order > 1 else ())

