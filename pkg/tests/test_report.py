"""
Tests for the corpus report and the non-nilpotent CL-algebra report
"""
import pytest

from src.config import DEFAULT_SEED
from src.core.leibniz import LeibnizAlgebra, StructureTable
from src.core.scalars import FIELD_Q
from src.services.catalog import CORPUS_SIZE, CorpusMember, catalog_digest, catalog_get, corpus_members
from src.services.report import counterexample_report, theorem_report

# tables whose sampled check may hit the locus where condition (2) fails
BASIS_ONLY = {"rho_2", "rho_3", "rho_4"}


@pytest.fixture(scope="module")
def report():
    return theorem_report(samples=30, seed=DEFAULT_SEED)


def test_one_row_per_member(report):
    assert len(report.rows) == CORPUS_SIZE
    assert [(row.name, row.parameter) for row in report.rows] == \
        [(m.name, m.parameter) for m in corpus_members()]


def test_every_member_is_nilpotent(report):
    for row in report.rows:
        assert row.series.reaches_zero, row.name


def test_basis_column_passes(report):
    for row in report.rows:
        assert row.basis.passed, row.name
        assert row.basis.checked == row.dim


def test_audit_reproduces_printed_centralizers(report):
    assert report.audit
    assert all(a.matches for a in report.audit)


def test_sampled_failures_are_confined_and_reproducible(report):
    algebras = {(m.name, m.parameter): m.algebra for m in corpus_members()}
    for row in report.failures():
        assert row.name in BASIS_ONLY
        witness = row.witness
        assert witness.condition == 2
        value = witness.evaluate(algebras[(row.name, row.parameter)])
        assert value == witness.value
        assert not value.is_zero()


def test_dict_form(report):
    data = report.to_dict()
    assert data["corpus_size"] == CORPUS_SIZE
    assert data["selection"]["sampled"] == {"mode": "sampled", "count": 30, "seed": f"0x{DEFAULT_SEED:X}"}
    assert data["verdict"] == ("pass" if report.passed else "fail")
    assert len(data["centralizer_audit"]) == len(report.audit)
    assert data["catalog_digest"] == catalog_digest()
    assert len(data["catalog_digest"]) == 64


def test_deterministic():
    members = [m for m in corpus_members() if m.name in ("rho_3", "rho_7", "lambda_6")]
    first = theorem_report(members, samples=25, seed=0x1234, audit=False).to_dict()
    second = theorem_report(members, samples=25, seed=0x1234, audit=False).to_dict()
    assert first == second


def test_mutated_member_fails():
    rho_1 = catalog_get("rho_1")
    brackets = {(i, j): {k: s for k, s in enumerate(v) if not s.is_zero()}
                for (i, j), v in rho_1.table.products().items()}
    brackets[(3, 1)] = {2: 1}
    mutant = LeibnizAlgebra(StructureTable.from_brackets(4, FIELD_Q, brackets), name="rho_1 mutant")
    members = [m for m in corpus_members() if m.name == "mu_1"] + \
        [CorpusMember("rho_1 mutant", None, mutant, False)]
    result = theorem_report(members, samples=10, audit=False)
    assert not result.passed
    assert [row.name for row in result.failures()] == ["rho_1 mutant"]
    failing = result.failures()[0]
    assert not failing.basis.passed
    assert failing.witness.evaluate(mutant) == failing.witness.value


def test_counterexample_report():
    result = counterexample_report(samples=60)
    assert result.passed
    assert result.lower.verdict == "not nilpotent"
    assert result.derived.verdict == "solvable (length 3)"
    assert [C.dim for C in result.centralizers] == [3, 2, 1]
    data = result.to_dict()
    assert data["verdict"] == "pass"
    assert set(data["centralizers"]) == {"e1", "e2", "e3"}
