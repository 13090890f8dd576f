import pytest

from critgroup.chartab import (
    character_sum,
    cyclic_group_table,
    irreducible_character,
    reflection_character,
    regular_character,
    symmetric_group_table,
    trivial_group_table,
)
from critgroup.critical import (
    NotFaithful,
    NotRealValued,
    critical_group,
    eigen_check,
    eigenvalues,
    full_report,
    mckay_cartan,
    order_formula,
    subgroup_certificates,
    sylow_bound_check,
)
from critgroup.exactnum import Cyclotomic
from critgroup.intlinalg import AbelianGroupStructure, IntegerMatrix, cokernel, scalar_identity, subgroup_embeds

from .fixtures import GOLDEN_C, GOLDEN_CTILDE

G = AbelianGroupStructure


@pytest.fixture(scope="module")
def s4():
    return symmetric_group_table(4)


@pytest.fixture(scope="module")
def s4_refl(s4):
    return reflection_character(4, s4)


class TestMcKayCartan:
    def test_s4_reflection(self, s4, s4_refl):
        pair = mckay_cartan(s4, s4_refl)
        assert pair.extended == GOLDEN_CTILDE
        assert pair.reduced == GOLDEN_C
        assert pair.degree == 3 and pair.trivial_index == 0

    def test_trivial_group(self):
        t = trivial_group_table()
        pair = mckay_cartan(t, irreducible_character(t, 0))
        assert pair.extended == IntegerMatrix.from_rows([[0]])
        assert pair.reduced.shape == (0, 0)
        assert critical_group(t, irreducible_character(t, 0)) == G()

    @pytest.mark.parametrize("n", range(2, 9))
    def test_cyclic_regular_is_complete_graph_laplacian(self, n):
        t = cyclic_group_table(n)
        J = IntegerMatrix(n, n, [1] * n * n)
        assert mckay_cartan(t, regular_character(t)).extended == scalar_identity(n, n) - J

    def test_null_vector(self, s4, s4_refl):
        C = mckay_cartan(s4, s4_refl).extended
        assert not any(C.T.apply(s4.degrees))
        for i in range(C.rows):
            for j in range(C.cols):
                if i != j:
                    assert C[i, j] <= 0


class TestCriticalGroup:
    def test_s4_reflection(self, s4, s4_refl):
        assert critical_group(s4, s4_refl) == G((4,))

    @pytest.mark.parametrize("m", range(2, 13))
    def test_cyclic_two_dim(self, m):
        t = cyclic_group_table(m)
        assert critical_group(t, character_sum(t, [1, m - 1])) == G((m,))

    def test_s4_regular(self, s4):
        assert critical_group(s4, regular_character(s4)) == G((24, 24, 24))

    def test_unfaithful(self, s4):
        with pytest.raises(NotFaithful) as info:
            critical_group(s4, irreducible_character(s4, 2))
        assert "(2,2)" in str(info.value)

    def test_two_definitions_agree(self, s4, s4_refl):
        pair = mckay_cartan(s4, s4_refl)
        assert cokernel(pair.extended.T) == (1, G((4,)))
        assert cokernel(pair.reduced.T) == (0, G((4,)))


class TestOrderFormula:
    def test_s4_reflection(self, s4, s4_refl):
        # (1/4!) (3-1)(3-0)(3+1)(3+1)
        assert order_formula(s4, s4_refl) == 2 * 3 * 4 * 4 // 24 == 4

    @pytest.mark.parametrize("table", [symmetric_group_table(n) for n in range(1, 7)]
                             + [cyclic_group_table(m) for m in range(1, 9)],
                             ids=lambda t: t.group_name)
    def test_regular(self, table):
        ell = table.num_classes - 1
        assert order_formula(table, regular_character(table)) == table.order ** (ell - 1) if ell else 1

    def test_unfaithful_is_zero(self, s4):
        assert order_formula(s4, irreducible_character(s4, 2)) == 0
        assert order_formula(s4, irreducible_character(s4, 0)) == 0

    def test_complex_character(self):
        t = cyclic_group_table(5)
        # chi_1 is complex; the conjugate factors multiply to rationals
        assert order_formula(t, irreducible_character(t, 1)) == critical_group(t, irreducible_character(t, 1)).order


class TestCertificates:
    def test_s4_reflection(self, s4, s4_refl):
        assert subgroup_certificates(s4, s4_refl) == [(4, 1)]

    @pytest.mark.parametrize("table", [symmetric_group_table(3), symmetric_group_table(5), cyclic_group_table(6)],
                             ids=lambda t: t.group_name)
    def test_regular(self, table):
        ell = table.num_classes - 1
        assert subgroup_certificates(table, regular_character(table)) == [(table.order, ell - 1)]

    def test_distinct_values(self):
        t = symmetric_group_table(3)
        # reflection of S3 takes values 2, 0, -1: all distinct
        assert subgroup_certificates(t, reflection_character(3, t)) == []

    def test_complex(self):
        t = cyclic_group_table(4)
        with pytest.raises(NotRealValued):
            subgroup_certificates(t, irreducible_character(t, 1))


class TestEigen:
    def test_s4_reflection(self, s4, s4_refl):
        assert eigen_check(s4, s4_refl)
        assert sorted(v.to_integer() for v in eigenvalues(s4, s4_refl)) == [0, 2, 3, 4, 4]

    def test_trivial_group(self):
        t = trivial_group_table()
        assert eigen_check(t, irreducible_character(t, 0))
        assert eigenvalues(t, irreducible_character(t, 0)) == [0]

    def test_c3(self):
        t = cyclic_group_table(3)
        gamma = character_sum(t, [1, 2])
        assert eigen_check(t, gamma)
        z = Cyclotomic.zeta(3)
        ev = eigenvalues(t, gamma)
        assert ev[1] == 2 - z - z ** 2 == 3 and ev[2] == 3 and ev[0] == 0

    def test_detects_wrong_matrix(self, s4, s4_refl, monkeypatch):
        import critgroup.critical as crit
        real = crit.mckay_cartan

        def broken(table, gamma):
            pair = real(table, gamma)
            return type(pair)(pair.extended + scalar_identity(pair.extended.rows, 1), pair.reduced, pair.degree)
        monkeypatch.setattr(crit, "mckay_cartan", broken)
        assert not crit.eigen_check(s4, s4_refl)


class TestSylow:
    def test_s4(self, s4, s4_refl):
        assert sylow_bound_check(s4, s4_refl) == (True, True)

    def test_c7(self):
        t = cyclic_group_table(7)
        assert sylow_bound_check(t, character_sum(t, [1, 6])) == (False, False)

    def test_trivial(self):
        t = trivial_group_table()
        assert sylow_bound_check(t, irreducible_character(t, 0)) == (True, True)


class TestFullReport:
    def test_s4_reflection(self, s4, s4_refl):
        r = full_report(s4, s4_refl)
        assert r.group == G((4,)) and r.order_formula_value == 4
        assert r.certificates == ((4, 1),)
        assert r.eigen_verified and r.sylow_bound_applicable and r.sylow_bound_holds

    def test_s3_regular(self):
        t = symmetric_group_table(3)
        r = full_report(t, regular_character(t))
        # three classes, so l = 2; degrees (1, 2, 1) give C = [[2, -2], [-2, 5]], det 6
        assert mckay_cartan(t, regular_character(t)).reduced == IntegerMatrix.from_rows([[2, -2], [-2, 5]])
        assert r.group == G((6,)) and r.order_formula_value == 6
        assert r.certificates == ((6, 1),)
        assert all(subgroup_embeds(d, k, r.group) for d, k in r.certificates)

    def test_trivial(self):
        t = trivial_group_table()
        r = full_report(t, irreducible_character(t, 0))
        assert r.group == G() and r.order_formula_value == 1 and r.certificates == ()

    def test_complex_gamma_has_no_certificates(self):
        t = cyclic_group_table(5)
        r = full_report(t, irreducible_character(t, 1))
        assert not r.real_valued and r.certificates == ()

    def test_json_dict(self, s4, s4_refl):
        d = full_report(s4, s4_refl).as_dict()
        assert d["invariant_factors"] == [4] and d["order"] == 4


@pytest.mark.parametrize("n", range(3, 8))
def test_positive_eigenvalues_for_real_characters(n):
    t = symmetric_group_table(n)
    for i in range(1, t.num_classes):
        gamma = irreducible_character(t, i)
        ev = eigenvalues(t, gamma)
        assert ev[0] == 0
        if all(v != 0 for v in ev[1:]):
            assert all(v.to_integer() > 0 for v in ev[1:])
