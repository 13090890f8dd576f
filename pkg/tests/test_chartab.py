import itertools
from collections import Counter
from dataclasses import replace
from math import factorial, prod

import pytest

from critgroup.chartab import (
    CharacterTable,
    ClassFunction,
    NotACharacter,
    OutOfRange,
    character_sum,
    cycle_type_from_label,
    cyclic_group_table,
    irreducible_character,
    is_faithful,
    is_rational_valued,
    is_real_valued,
    product_decomposition,
    reflection_character,
    regular_character,
    symmetric_group_table,
    trivial_group_table,
    validate,
)
from critgroup.exactnum import Cyclotomic
from critgroup.intlinalg import IntegerMatrix
from critgroup.young import Partition, partitions_of

from .fixtures import GOLDEN_M, GOLDEN_S4_CYCLE_TYPES, GOLDEN_S4_TABLE


def cycle_type(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        out.append(length)
    return Partition(sorted(out, reverse=True))


def hook_dimension(lam):
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(n) // hooks


def table_column_index(table):
    return {cycle_type_from_label(c.label): k for k, c in enumerate(table.classes)}


class TestSymmetric:
    def test_s4_matches_golden(self):
        t = symmetric_group_table(4)
        col = table_column_index(t)
        for i, row in enumerate(GOLDEN_S4_TABLE):
            for j, mu in enumerate(GOLDEN_S4_CYCLE_TYPES):
                assert t.values[i][col[Partition(mu)]] == row[j]

    def test_s1(self):
        t = symmetric_group_table(1)
        assert t.values == ((Cyclotomic.rational(1),),)
        assert validate(t) == []

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            symmetric_group_table(0)
        with pytest.raises(OutOfRange):
            symmetric_group_table(13)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_validates(self, n):
        assert validate(symmetric_group_table(n)) == []

    @pytest.mark.parametrize("n", range(1, 7))
    def test_class_sizes_by_enumeration(self, n):
        t = symmetric_group_table(n)
        counts = Counter(cycle_type(p) for p in itertools.permutations(range(n)))
        col = table_column_index(t)
        for mu, k in col.items():
            assert t.classes[k].size == counts[mu]
        assert t.classes[0].label == str(Partition((1,) * n))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_column_orthogonality(self, n):
        t = symmetric_group_table(n)
        k = t.num_classes
        for a in range(k):
            for b in range(k):
                s = sum((t.values[i][a] * t.values[i][b].conj() for i in range(k)), Cyclotomic.rational(0))
                assert s == (t.order // t.classes[a].size if a == b else 0)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_degrees_match_hook_formula(self, n):
        t = symmetric_group_table(n)
        assert list(t.degrees) == [hook_dimension(lam) for lam in partitions_of(n)]

    @pytest.mark.parametrize("n", range(2, 9))
    def test_standard_row_is_fixed_points_minus_one(self, n):
        t = symmetric_group_table(n)
        row = t.values[1]  # (n-1, 1)
        for k, c in enumerate(t.classes):
            mu = cycle_type_from_label(c.label)
            assert row[k] == mu.count(1) - 1

    @pytest.mark.parametrize("n", range(2, 9))
    def test_sign_row(self, n):
        t = symmetric_group_table(n)
        for k, c in enumerate(t.classes):
            mu = cycle_type_from_label(c.label)
            assert t.values[-1][k] == (-1) ** (n - len(mu))

    def test_reflection_character(self):
        assert [v.to_integer() for v in reflection_character(4).values] == [3, -1, 0, -1, 1]
        col = table_column_index(symmetric_group_table(4))
        gamma = reflection_character(4)
        assert [gamma.values[col[Partition(mu)]] for mu in GOLDEN_S4_CYCLE_TYPES] == [3, 1, 0, -1, -1]
        assert [v.to_integer() for v in reflection_character(2).values] == [1, -1]
        t5 = symmetric_group_table(5)
        assert reflection_character(5).values[table_column_index(t5)[Partition((2, 2, 1))]] == 0
        with pytest.raises(OutOfRange):
            reflection_character(1)


class TestCyclic:
    def test_trivial(self):
        t = cyclic_group_table(1)
        assert t.num_classes == 1 and validate(t) == []
        assert t == trivial_group_table()

    def test_c2(self):
        assert cyclic_group_table(2).values == ((1, 1), (1, -1))

    def test_c4(self):
        t = cyclic_group_table(4)
        z = Cyclotomic.zeta(4)
        assert t.values[1][1:] == (z, Cyclotomic.rational(-1), -z)
        assert t.exponent == 4

    @pytest.mark.parametrize("m", range(1, 13))
    def test_validates(self, m):
        assert validate(cyclic_group_table(m)) == []


class TestValidate:
    def test_corrupted_s4(self):
        t = symmetric_group_table(4)
        col = table_column_index(t)[Partition((3, 1))]
        rows = [list(r) for r in t.values]
        assert rows[2][col] == -1
        rows[2][col] = Cyclotomic.rational(1)
        bad = replace(t, values=tuple(tuple(r) for r in rows))
        # the norm of chi_2 is unchanged (the value is squared); by hand
        # <chi_0, chi_2> = (2 + 8*1 + 3*2) / 24 = 2/3 and likewise <chi_2, chi_4>
        assert validate(bad) == ["row orthogonality: <chi_0, chi_2> = 2/3",
                                 "row orthogonality: <chi_2, chi_4> = 2/3"]

    def test_bad_class_sizes(self):
        t = symmetric_group_table(3)
        classes = (t.classes[0], replace(t.classes[1], size=3)) + t.classes[2:]
        assert any("class sizes" in p for p in validate(replace(t, classes=classes)))

    def test_bad_trivial_row(self):
        t = cyclic_group_table(3)
        vals = (t.values[1], t.values[0], t.values[2])
        problems = validate(replace(t, values=vals))
        assert any("row 0" in p for p in problems)


class TestProductDecomposition:
    def test_s4_reflection_is_golden_M(self):
        t = symmetric_group_table(4)
        assert product_decomposition(t, reflection_character(4, t)) == GOLDEN_M

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_trivial_character_gives_identity(self, n):
        t = symmetric_group_table(n)
        assert product_decomposition(t, irreducible_character(t, 0)) == IntegerMatrix.identity(t.num_classes)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_regular(self, n):
        t = symmetric_group_table(n)
        d = t.degrees
        want = IntegerMatrix.from_rows([[a * b for b in d] for a in d])
        assert product_decomposition(t, regular_character(t)) == want

    @pytest.mark.parametrize("table", [symmetric_group_table(5), symmetric_group_table(6), cyclic_group_table(7)],
                             ids=["S5", "S6", "C7"])
    def test_dimension_count(self, table):
        d = table.degrees
        for g in range(table.num_classes):
            gamma = irreducible_character(table, g)
            M = product_decomposition(table, gamma)
            n = gamma.degree.to_integer()
            for i in range(M.rows):
                assert sum(M[i, j] * d[j] for j in range(M.cols)) == n * d[i]

    def test_not_a_character(self):
        t = symmetric_group_table(3)
        half = ClassFunction(t, (Cyclotomic.rational(1), Cyclotomic.rational(0), Cyclotomic.rational(0)))
        with pytest.raises(NotACharacter):
            product_decomposition(t, half)
        neg = ClassFunction(t, tuple(-v for v in t.values[0]))
        with pytest.raises(NotACharacter):
            product_decomposition(t, neg)


class TestPredicates:
    def test_faithful(self):
        t = symmetric_group_table(4)
        assert is_faithful(t, reflection_character(4, t))
        assert not is_faithful(t, irreducible_character(t, 2))  # (2,2)
        assert not is_faithful(t, irreducible_character(t, 0))
        assert is_faithful(trivial_group_table(), irreducible_character(trivial_group_table(), 0))

    def test_real_rational(self):
        t = symmetric_group_table(4)
        r = reflection_character(4, t)
        assert is_real_valued(r) and is_rational_valued(r)
        c4 = cyclic_group_table(4)
        chi = irreducible_character(c4, 1)
        assert not is_real_valued(chi) and not is_rational_valued(chi)
        reg = regular_character(t)
        assert is_real_valued(reg) and is_rational_valued(reg)
        c5 = cyclic_group_table(5)
        s = character_sum(c5, [1, 4])
        assert is_real_valued(s) and not is_rational_valued(s)

    def test_character_sum_and_regular(self):
        assert [v.to_integer() for v in regular_character(symmetric_group_table(4)).values] == [24, 0, 0, 0, 0]
        assert [v.to_integer() for v in regular_character(trivial_group_table()).values] == [1]
        assert [v.to_integer() for v in regular_character(cyclic_group_table(3)).values] == [3, 0, 0]
        c3 = cyclic_group_table(3)
        assert character_sum(c3, [0, 1, 2]) == regular_character(c3)


def test_table_equality_is_structural():
    assert symmetric_group_table(4) == symmetric_group_table(4)
    assert isinstance(symmetric_group_table(3), CharacterTable)
