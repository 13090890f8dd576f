"""Sweeps that check the critical-group identities over the built-in groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .chartab import (
    CharacterTable,
    ClassFunction,
    character_sum,
    cyclic_group_table,
    irreducible_character,
    is_faithful,
    is_real_valued,
    product_decomposition,
    reflection_character,
    regular_character,
    symmetric_group_table,
)
from .critical import (
    critical_group,
    eigen_check,
    mckay_cartan,
    order_formula,
    regular_expected,
    subgroup_certificates,
    sylow_bound_check,
)
from .intlinalg import AbelianGroupStructure, IntegerMatrix, scalar_identity, subgroup_embeds
from .young import (
    down_matrix,
    kronecker_matrix,
    partition_count,
    specialization_check,
    theorem15_structure,
    ud_matrix,
    up_matrix,
)

SUITES = ("order", "regular", "reflection", "eigen", "sylow", "young")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    instance: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status} {self.suite}/{self.name} [{self.instance}]{tail}"


def _check(suite: str, name: str, instance: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        return Check(suite, name, instance, False, f"{type(exc).__name__}: {exc}")
    return Check(suite, name, instance, ok, detail)


def faithful_corpus(n_max: int, m_max: int) -> Iterator[tuple[str, CharacterTable, ClassFunction]]:
    """Faithful irreducible characters of S_n (2 <= n <= n_max) and chi_1 + chi_(m-1) on Z/m."""
    for n in range(2, n_max + 1):
        t = symmetric_group_table(n)
        for i in range(t.num_classes):
            chi = irreducible_character(t, i)
            if is_faithful(t, chi):
                yield f"S{n} chi_{i}", t, chi
    for m in range(2, m_max + 1):
        t = cyclic_group_table(m)
        yield f"C{m} chi_1+chi_{m - 1}", t, character_sum(t, [1, m - 1])


def all_characters(n_max: int, m_max: int) -> Iterator[tuple[str, CharacterTable, ClassFunction]]:
    for n in range(1, n_max + 1):
        t = symmetric_group_table(n)
        for i in range(t.num_classes):
            yield f"S{n} chi_{i}", t, irreducible_character(t, i)
    for m in range(1, m_max + 1):
        t = cyclic_group_table(m)
        for i in range(m):
            yield f"C{m} chi_{i}", t, irreducible_character(t, i)
        if m >= 2:
            yield f"C{m} chi_1+chi_{m - 1}", t, character_sum(t, [1, m - 1])


def order_suite(n_max: int, m_max: int) -> list[Check]:
    out = []
    for label, t, chi in faithful_corpus(n_max, m_max):
        def order_eq(t=t, chi=chi):
            K, f = critical_group(t, chi), order_formula(t, chi)
            return K.order == f, f"|K|={K.order} formula={f}"
        out.append(_check("order", "order-formula", label, order_eq))
        if is_real_valued(chi):
            def certs(t=t, chi=chi):
                K = critical_group(t, chi)
                cs = subgroup_certificates(t, chi)
                return all(subgroup_embeds(d, k, K) for d, k in cs), f"K={K} certificates={cs}"
            out.append(_check("order", "certificates", label, certs))
    for label, t, chi in all_characters(n_max, m_max):
        def blichfeldt(t=t, chi=chi):
            f = order_formula(t, chi)
            return f >= 0 and (f == 0) == (not is_faithful(t, chi)), f"value={f}"
        out.append(_check("order", "blichfeldt", label, blichfeldt))
    return out


def regular_suite(n_max: int, m_max: int) -> list[Check]:
    out = []
    tables = [symmetric_group_table(n) for n in range(1, n_max + 1)]
    tables += [cyclic_group_table(m) for m in range(1, m_max + 1)]
    for t in tables:
        def reg(t=t):
            K = critical_group(t, regular_character(t))
            return K == regular_expected(t), f"K={K}"
        out.append(_check("regular", "regular-structure", t.group_name, reg))
    for m in range(2, m_max + 1):
        t = cyclic_group_table(m)

        def complete(t=t, m=m):
            pair = mckay_cartan(t, regular_character(t))
            laplacian = scalar_identity(m, m) - IntegerMatrix(m, m, [1] * (m * m))
            K = critical_group(t, regular_character(t))
            want = AbelianGroupStructure((m,) * (m - 2))
            return pair.extended == laplacian and K == want, f"K={K}"
        out.append(_check("regular", "complete-graph", f"K{m}", complete))
    return out


def reflection_suite(n_max: int) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):
        def closed_form(n=n):
            t = symmetric_group_table(n)
            K = critical_group(t, reflection_character(n, t))
            q = theorem15_structure(n)
            return K == q, f"K={K} closed-form={q}"
        out.append(_check("reflection", "closed-form", f"S{n}", closed_form))

        def order(n=n):
            t = symmetric_group_table(n)
            f = order_formula(t, reflection_character(n, t))
            return theorem15_structure(n).order == f, f"formula={f}"
        out.append(_check("reflection", "order", f"S{n}", order))
    return out


def eigen_suite(n_max: int, m_max: int) -> list[Check]:
    out = []
    corpus = list(faithful_corpus(n_max, m_max))
    for n in range(1, n_max + 1):
        t = symmetric_group_table(n)
        corpus.append((f"{t.group_name} regular", t, regular_character(t)))
    for label, t, chi in corpus:
        out.append(_check("eigen", "eigenvectors", label, lambda t=t, chi=chi: (eigen_check(t, chi), "")))
    return out


def _primes(x: int) -> list[int]:
    ps, p = [], 2
    while p * p <= x:
        if x % p == 0:
            ps.append(p)
            while x % p == 0:
                x //= p
        p += 1
    return ps + ([x] if x > 1 else [])


def sylow_suite(n_max: int, m_max: int) -> list[Check]:
    out = []
    for label, t, chi in faithful_corpus(n_max, m_max):
        def sylow(t=t, chi=chi):
            applicable, holds = sylow_bound_check(t, chi)
            if applicable:
                return holds, f"primes of |K| = {_primes(critical_group(t, chi).order)}"
            # outside the hypothesis: only require the report to be truthful
            n = chi.degree.to_integer()
            truth = all(p <= 2 * n for p in _primes(critical_group(t, chi).order))
            return holds == truth, f"not applicable; bound {'holds' if holds else 'fails'}"
        out.append(_check("sylow", "sylow-bound", label, sylow))
    return out


def young_suite(n_max: int) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):
        def kron(n=n):
            K = kronecker_matrix(n)
            ud = ud_matrix(n) - scalar_identity(partition_count(n), 1)
            t = symmetric_group_table(n)
            M = product_decomposition(t, reflection_character(n, t))
            return K == ud == M, ""
        out.append(_check("young", "kronecker=UD-I=M", f"n={n}", kron))
    for n in range(1, n_max + 1):
        def spec(n=n):
            bad = [t for t in range(-n, 6) if not specialization_check(n, t)]
            return not bad, f"failing t: {bad}" if bad else "t in -n..5"
        out.append(_check("young", "alpha-specialization", f"n={n}", spec))

        def adjoint(n=n):
            return down_matrix(n) == up_matrix(n - 1).T, ""
        out.append(_check("young", "up-down-adjoint", f"n={n}", adjoint))
    for n in range(2, n_max + 1):
        def chain(n=n):
            f = theorem15_structure(n).invariant_factors
            return all(b % a == 0 for a, b in zip(f, f[1:])), str(f)
        out.append(_check("young", "q-divisibility", f"n={n}", chain))
    return out


def run_suite(suite: str, n_max: int = 7, m_max: int = 10) -> list[Check]:
    if suite == "all":
        return [c for s in SUITES for c in run_suite(s, n_max, m_max)]
    if suite == "order":
        return order_suite(n_max, m_max)
    if suite == "regular":
        return regular_suite(n_max, m_max)
    if suite == "reflection":
        return reflection_suite(n_max)
    if suite == "eigen":
        return eigen_suite(n_max, m_max)
    if suite == "sylow":
        return sylow_suite(n_max, m_max)
    if suite == "young":
        return young_suite(n_max)
    raise ValueError(f"unknown suite {suite!r}")

