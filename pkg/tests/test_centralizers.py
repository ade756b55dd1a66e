"""
Tests for centralizers, the CL-conditions and CL-elements
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import e, q_vectors, vec
from src.core.errors import DimensionMismatch
from src.core.leibniz import LeibnizAlgebra, StructureTable, is_lie, lower_central_series, restrict
from src.core.linalg import is_subspace_of, span
from src.core.scalars import FIELD_Q
from src.services.catalog import catalog_entry, catalog_get, catalog_names
from src.services.centralizers import (
    XSelection,
    centralizer,
    centralizer_is_ideal,
    centralizer_is_subalgebra,
    cl_check_at,
    cl_element_check,
    cl_element_space_is_cl,
    cl_element_subspace,
    is_cl,
)


def sub(dim, *indices):
    return span([e(i, dim) for i in indices], dim, FIELD_Q)


# every stored table, parametric entries at generic a
ALL_ALGEBRAS = tuple(catalog_names())


def algebra(name):
    return catalog_entry(name).algebra


class TestCentralizer:
    def test_mu_1(self, mu_1):
        assert centralizer(mu_1, e(1, 2)) == sub(2, 2)
        assert centralizer(mu_1, e(2, 2)) == mu_1.full_space()

    def test_zero_element(self, rho_1):
        assert centralizer(rho_1, rho_1.zero_vector()) == rho_1.full_space()

    def test_one_sided(self):
        L = catalog_get("remark_3_2")
        x = e(3, 3)
        assert e(1, 3) in centralizer(L, x, "right")
        assert e(1, 3) not in centralizer(L, x, "left")
        assert centralizer(L, x) == sub(3, 2)

    def test_counterexample(self, counterexample):
        assert centralizer(counterexample, e(1, 3)) == counterexample.full_space()
        assert centralizer(counterexample, e(2, 3)) == sub(3, 1, 2)
        assert centralizer(counterexample, e(3, 3)) == sub(3, 1)

    def test_unknown_kind(self, mu_1):
        with pytest.raises(ValueError):
            centralizer(mu_1, e(1, 2), "middle")

    def test_parametric(self):
        L = catalog_get("lambda_4", 0)
        assert centralizer(L, e(2, 3)) == sub(3, 2, 3)


class TestCLConditions:
    def test_all_hold_on_mu_1(self, mu_1):
        for x in (e(1, 2), e(2, 2), vec(1, 1)):
            conditions = cl_check_at(mu_1, x)
            assert conditions.two_sided
            assert conditions.first_failure() is None

    def test_rho_3_off_the_basis(self):
        L = algebra("rho_3")
        conditions = cl_check_at(L, vec(1, -1, 0, 0))
        assert conditions.condition_1
        assert not conditions.condition_2
        assert conditions.condition_3
        assert not conditions.left
        assert conditions.right
        witness = conditions.first_failure()
        assert witness.condition == 2
        assert witness.evaluate(L) == witness.value
        assert not witness.value.is_zero()

    @pytest.mark.parametrize("name, alpha, x", [
        ("rho_2", None, (1, -1, 1, 0)),
        ("rho_3", None, (1, -1, 0, 0)),
        ("rho_4", 0, (1, -1, -1, 0)),
        ("rho_4", 1, (1, -1, 0, 0)),
    ])
    def test_basis_passes_but_an_element_fails(self, name, alpha, x):
        L = catalog_get(name, alpha)
        assert is_cl(L, XSelection.basis()).passed
        assert is_cl(L, XSelection.pairs()).passed
        verdict = is_cl(L, XSelection.of([vec(*x)]))
        assert not verdict.passed
        assert verdict.checked == 1
        assert verdict.witness.condition == 2
        assert verdict.witness.evaluate(L) == verdict.witness.value
        assert is_cl(L, XSelection.of([vec(*x)]), "right").passed

    @pytest.mark.parametrize("name", ALL_ALGEBRAS)
    def test_equivalence_with_ideal_sides(self, name):
        L = algebra(name)
        for x in XSelection.pairs().vectors(L) + XSelection.sampled(15, 7).vectors(L):
            conditions = cl_check_at(L, x)
            assert conditions.left == centralizer_is_ideal(L, x, "left"), x
            assert conditions.right == centralizer_is_ideal(L, x, "right"), x
            assert conditions.two_sided == centralizer_is_ideal(L, x, "two_sided"), x

    def test_equivalence_on_the_failing_locus(self):
        L = algebra("rho_3")
        x = vec(2, -2, 0, 5)
        assert not centralizer_is_ideal(L, x, "left")
        assert not cl_check_at(L, x).left

    def test_mutated_table_fails_on_the_basis(self, rho_1):
        brackets = {(i, j): {k: s for k, s in enumerate(v) if not s.is_zero()}
                    for (i, j), v in rho_1.table.products().items()}
        brackets[(3, 1)] = {2: 1}
        mutant = LeibnizAlgebra(StructureTable.from_brackets(4, FIELD_Q, brackets), name="rho_1 mutant")
        verdict = is_cl(mutant, XSelection.basis())
        assert not verdict.passed
        assert verdict.witness.x == e(1, 4)
        assert verdict.witness.condition == 3
        assert verdict.witness.evaluate(mutant) == e(3, 4)


class TestIsCL:
    def test_counterexample_is_cl(self, counterexample):
        assert is_cl(counterexample, XSelection.basis()).passed
        assert is_cl(counterexample, XSelection.sampled(100, 1)).passed

    def test_verdict_records_selection(self, mu_1):
        sel = XSelection.sampled(12, 0xBEEF)
        verdict = is_cl(mu_1, sel)
        assert verdict.selection is sel
        assert verdict.checked == 12
        assert verdict.to_dict()["selection"] == {"mode": "sampled", "count": 12, "seed": "0xBEEF"}

    def test_unknown_flavor(self, mu_1):
        with pytest.raises(ValueError):
            is_cl(mu_1, XSelection.basis(), "diagonal")

    @pytest.mark.parametrize("name", ALL_ALGEBRAS)
    def test_cube_zero_algebras_are_cl(self, name):
        L = algebra(name)
        series = lower_central_series(L)
        if not (series.reaches_zero and series.step <= 3):
            pytest.skip("L^3 is not zero")
        for sel in (XSelection.basis(), XSelection.pairs(), XSelection.sampled(60, 3)):
            assert is_cl(L, sel).passed

    def test_parametric_entries_pass_on_the_basis(self):
        for name in ("lambda_4", "rho_9", "rho_10", "rho_16"):
            assert is_cl(catalog_get(name), XSelection.basis()).passed


class TestXSelection:
    def test_sampled_is_deterministic(self, rho_1):
        first = XSelection.sampled(20, 99).vectors(rho_1)
        second = XSelection.sampled(20, 99).vectors(rho_1)
        assert first == second
        assert len(first) == 20
        assert all(not v.is_zero() for v in first)

    def test_pairs(self, rho_1):
        xs = XSelection.pairs().vectors(rho_1)
        assert len(xs) == 4 + 6
        assert xs[4] == vec(1, 1, 0, 0)

    def test_explicit_checks_length(self, rho_1):
        with pytest.raises(DimensionMismatch):
            XSelection.of([vec(1, 0)]).vectors(rho_1)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            XSelection("everything")
        with pytest.raises(ValueError):
            XSelection.sampled(0, 1)

    def test_describe(self):
        assert XSelection.sampled(5, 255).describe() == "sampled(5, seed=0xFF)"
        assert XSelection.pairs().describe() == "basis_plus_pairs"


class TestCLElements:
    def test_zero_is_a_cl_element(self, rho_1):
        assert cl_element_check(rho_1, rho_1.zero_vector(), XSelection.pairs()).passed

    def test_rho_3_failing_direction(self):
        L = algebra("rho_3")
        report = cl_element_check(L, e(1, 4), XSelection.of([vec(1, -1, 0, 0)]))
        assert not report.passed
        assert report.witness.condition == 2
        assert report.witness.evaluate(L) == report.witness.value

    def test_wrong_length(self, rho_1):
        with pytest.raises(DimensionMismatch):
            cl_element_check(rho_1, vec(1, 0), XSelection.basis())

    def test_subspace_excludes_failing_element(self):
        L = algebra("rho_3")
        S, closed = cl_element_subspace(L, XSelection.of([vec(1, -1, 0, 0)]))
        assert closed
        assert e(1, 4) not in S
        assert e(2, 4) not in S
        assert vec(1, -1, 0, 0) in S
        assert S.dim == 3

    @pytest.mark.parametrize("name", ALL_ALGEBRAS)
    def test_subspace_is_closed_and_cl(self, name):
        L = algebra(name)
        for sel in (XSelection.basis(), XSelection.pairs()):
            S, closed = cl_element_subspace(L, sel)
            assert closed
            for v in S.vectors():
                assert cl_element_check(L, v, sel).passed
            assert cl_element_space_is_cl(L, sel).passed

    def test_subspace_matches_elementwise_check(self):
        L = algebra("rho_2")
        sel = XSelection.of([vec(1, -1, 1, 0), e(1, 4), e(2, 4)])
        S, _ = cl_element_subspace(L, sel)
        for i in range(1, 5):
            assert (e(i, 4) in S) == cl_element_check(L, e(i, 4), sel).passed

    def test_whole_algebra_when_cl(self, mu_1):
        S, closed = cl_element_subspace(mu_1, XSelection.pairs())
        assert S == mu_1.full_space()
        assert closed

    def test_restricted_space(self):
        L = algebra("rho_3")
        S, _ = cl_element_subspace(L, XSelection.of([vec(1, -1, 0, 0)]))
        assert restrict(L, S).dim == S.dim


@pytest.mark.parametrize("name", ALL_ALGEBRAS)
def test_centralizers_are_subalgebras(name):
    L = algebra(name)
    for x in XSelection.pairs().vectors(L) + XSelection.sampled(100, 11).vectors(L):
        assert centralizer_is_subalgebra(L, x)


@pytest.mark.parametrize("name", ALL_ALGEBRAS)
def test_square_lies_in_the_right_centralizer(name):
    L = algebra(name)
    for x in XSelection.sampled(100, 23).vectors(L):
        assert L.bracket(x, x) in centralizer(L, x, "right"), x


@pytest.mark.parametrize("name", [n for n in ALL_ALGEBRAS if is_lie(algebra(n))])
def test_lie_centralizers_are_one_sided_alike(name):
    L = algebra(name)
    for x in XSelection.sampled(100, 29).vectors(L):
        left = centralizer(L, x, "left")
        assert left == centralizer(L, x, "right")
        assert left == centralizer(L, x)


def test_lie_entries_exist():
    assert {"abelian_2", "lambda_3"} <= {n for n in ALL_ALGEBRAS if is_lie(algebra(n))}


@settings(max_examples=60, deadline=None)
@given(q_vectors(4), q_vectors(4))
def test_centralizer_membership(x, y):
    L = catalog_get("rho_7")
    C = centralizer(L, x)
    if y in C:
        assert L.bracket(x, y).is_zero() and L.bracket(y, x).is_zero()
    else:
        assert not (L.bracket(x, y).is_zero() and L.bracket(y, x).is_zero())


@settings(max_examples=30, deadline=None)
@given(q_vectors(3))
def test_selection_growth_shrinks_cl_elements(x):
    L = catalog_get("counterexample_s4")
    small = XSelection.basis()
    large = XSelection.of(XSelection.basis().vectors(L) + [x])
    S_small, _ = cl_element_subspace(L, small)
    S_large, _ = cl_element_subspace(L, large)
    assert is_subspace_of(S_large, S_small)


def test_fraction_coordinates(counterexample):
    x = vec(Fraction(1, 2), Fraction(-3, 4), 2)
    assert cl_check_at(counterexample, x).two_sided
