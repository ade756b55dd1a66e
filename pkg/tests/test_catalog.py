"""
Tests for the built-in catalog
"""
from fractions import Fraction

import pytest

from conftest import e
from src.core.errors import ExcludedParameter, PoleError, UnknownName
from src.core.leibniz import lower_central_series, validate_leibniz
from src.core.linalg import span
from src.core.scalars import FIELD_Q, FIELD_QA
from src.services.catalog import (
    CORPUS_NAMES,
    CORPUS_SIZE,
    all_algebras,
    audit_centralizers,
    catalog_entry,
    catalog_get,
    catalog_names,
    corpus_members,
    theorem_corpus,
)
from src.services.centralizers import centralizer


def test_every_entry_satisfies_the_identity():
    for L in all_algebras():
        assert validate_leibniz(L.table).passed, L.name


def test_corpus_size():
    members = corpus_members()
    assert len(members) == CORPUS_SIZE == 43
    assert len(theorem_corpus()) == CORPUS_SIZE
    assert [m.name for m in members][:3] == ["abelian_1", "abelian_2", "mu_1"]


def test_corpus_parameters():
    labels = [(m.name, m.parameter) for m in corpus_members() if m.name in ("rho_4", "lambda_4")]
    assert labels == [
        ("lambda_4", "generic"), ("lambda_4", "a=0"), ("lambda_4", "a=1"),
        ("lambda_4", "a=-1"), ("lambda_4", "a=2"),
        ("rho_4", "a=0"), ("rho_4", "a=1"),
    ]


def test_corpus_is_nilpotent():
    for member in corpus_members():
        assert lower_central_series(member.algebra).reaches_zero, member.name


def test_only_non_nilpotent_entry():
    non_nilpotent = [L.name for L in all_algebras() if not lower_central_series(L).reaches_zero]
    assert non_nilpotent == ["counterexample_s4"]


@pytest.mark.parametrize("name", CORPUS_NAMES + ("counterexample_s4", "example_3_8"))
def test_printed_centralizers(name):
    for index, expected, computed in audit_centralizers(name):
        assert expected == computed, f"{name} C(e{index + 1})"


def test_rho_6_misprint_is_recorded():
    entry = catalog_entry("rho_6")
    assert entry.expected_centralizer(2).dim == 3
    assert any("misprint" in note for note in entry.notes)


def test_generic_values_differ_at_zero():
    assert centralizer(catalog_get("rho_10", 0), e(1, 4)) == span([e(2, 4), e(3, 4), e(4, 4)], 4, FIELD_Q)
    assert centralizer(catalog_get("rho_10", 2), e(1, 4)) == span([e(3, 4), e(4, 4)], 4, FIELD_Q)


class TestCatalogGet:
    def test_rational_entry(self):
        L = catalog_get("rho_1")
        assert L.field == FIELD_Q
        assert L.leibniz_checked

    def test_generic_parameter(self):
        assert catalog_get("rho_9").field == FIELD_QA

    def test_instantiation(self):
        L = catalog_get("rho_16", Fraction(1, 2))
        assert L.field == FIELD_Q
        assert L.name == "rho_16(a=1/2)"
        assert L.table.product(1, 0)[3] == 3

    def test_rendered_coefficient(self):
        L = catalog_get("rho_16")
        assert L.table.product(1, 0)[3].render() == "(-a - 1)/(a - 1)"

    def test_excluded_value(self):
        with pytest.raises(ExcludedParameter):
            catalog_get("rho_16", 1)

    def test_restricted_family(self):
        with pytest.raises(ExcludedParameter):
            catalog_get("rho_4", 2)
        with pytest.raises(ExcludedParameter):
            catalog_get("rho_4")

    def test_parameter_on_a_fixed_table(self):
        with pytest.raises(ExcludedParameter):
            catalog_get("rho_1", 0)

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            catalog_get("rho_18")

    def test_excluded_value_is_a_pole(self):
        with pytest.raises(PoleError):
            catalog_entry("rho_16").algebra.substitute(1)


def test_names():
    names = catalog_names()
    assert set(CORPUS_NAMES) <= set(names)
    assert {"counterexample_s4", "example_3_8", "remark_3_2", "example_2_4"} <= set(names)


def test_describe_parameter():
    assert catalog_entry("rho_4").describe_parameter() == "a in {0, 1}"
    assert catalog_entry("rho_16").describe_parameter() == "a != 1"
    assert catalog_entry("lambda_4").describe_parameter() == "a in Q"
    assert catalog_entry("mu_1").describe_parameter() == ""
